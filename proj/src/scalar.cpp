#include "fockbridge/scalar.hpp"

#include <cctype>

namespace fockbridge {

namespace {

bool positive_lead(const IntPoly& p) { return p.lex_leading_coeff() > 0; }

}  // namespace

Scalar::Scalar(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

Scalar Scalar::canonical(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw DivisionByZero("division by zero");
  if (num.is_zero()) return Scalar();
  if (num.is_constant() && den.is_constant()) {
    mpq_class r(num.constant_value(), den.constant_value());
    r.canonicalize();
    return Scalar(r);
  }
  if (!den.is_one()) {
    IntPoly g = gcd(num, den);
    if (!g.is_one()) {
      num = *num.divide_exact(g);
      den = *den.divide_exact(g);
    }
  }
  if (!positive_lead(den)) {
    num = -num;
    den = -den;
  }
  return Scalar(std::move(num), std::move(den), 0);
}

Scalar Scalar::fraction(const IntPoly& num, const IntPoly& den) { return canonical(num, den); }

Scalar Scalar::from_poly(IntPoly p) { return Scalar(std::move(p), IntPoly(1), 0); }

Scalar Scalar::q() { return from_poly(IntPoly::monomial(1, 1, 0)); }

Scalar Scalar::t() { return from_poly(IntPoly::monomial(1, 0, 1)); }

mpq_class Scalar::to_rational() const {
  if (!is_rational()) throw Error("scalar " + to_string() + " is not a rational number");
  mpq_class r(num_.constant_value(), den_.constant_value());
  r.canonicalize();
  return r;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, 0); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (positive_lead(num_)) return Scalar(den_, num_, 0);
  return Scalar(-den_, -num_, 0);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_rational() && b.is_rational()) return Scalar(a.to_rational() + b.to_rational());
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return Scalar(a.num_ + b.num_, a.den_, 0);
    return Scalar::canonical(a.num_ + b.num_, a.den_);
  }
  IntPoly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    IntPoly num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return Scalar();
    return Scalar(std::move(num), a.den_ * b.den_, 0);
  }
  IntPoly ad = *a.den_.divide_exact(g);
  IntPoly bd = *b.den_.divide_exact(g);
  IntPoly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return Scalar();
  IntPoly den = a.den_ * bd;
  IntPoly h = gcd(num, g);
  if (!h.is_one()) {
    num = *num.divide_exact(h);
    den = *den.divide_exact(h);
  }
  if (!positive_lead(den)) {
    num = -num;
    den = -den;
  }
  return Scalar(std::move(num), std::move(den), 0);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.is_rational() && b.is_rational()) return Scalar(a.to_rational() * b.to_rational());
  if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_, a.den_, 0);
  IntPoly g1 = gcd(a.num_, b.den_);
  IntPoly g2 = gcd(b.num_, a.den_);
  IntPoly an = g1.is_one() ? a.num_ : *a.num_.divide_exact(g1);
  IntPoly bd = g1.is_one() ? b.den_ : *b.den_.divide_exact(g1);
  IntPoly bn = g2.is_one() ? b.num_ : *b.num_.divide_exact(g2);
  IntPoly ad = g2.is_one() ? a.den_ : *a.den_.divide_exact(g2);
  IntPoly num = an * bn, den = ad * bd;
  if (!positive_lead(den)) {
    num = -num;
    den = -den;
  }
  return Scalar(std::move(num), std::move(den), 0);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

std::string Scalar::to_string() const {
  std::string n = num_.to_string();
  if (den_.is_one()) return n;
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (!den_.is_constant()) d = "(" + d + ")";
  return n + "/" + d;
}

Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw Error("unknown arithmetic op");
}

// Recursive-descent parser for the textual scalar grammar.
namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : src_(s) {}

  Scalar parse_all() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar parse error at offset " + std::to_string(pos_) + " in \"" +
                     std::string(src_) + "\": " + what);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) throw DivisionByZero("division by zero in \"" + std::string(src_) + "\"");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (accept('^')) {
      skip_ws();
      bool neg = accept('-');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(src_.substr(start, pos_ - start)));
      if (neg && base.is_zero()) throw DivisionByZero("division by zero in \"" + std::string(src_) + "\"");
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return Scalar::q();
    }
    if (c == 't') {
      ++pos_;
      return Scalar::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return Scalar(mpz_class(std::string(src_.substr(start, pos_ - start))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse_all(); }

std::string Bindings::to_string() const {
  std::string out;
  if (q) out += "q=" + q->to_string();
  if (t) out += std::string(out.empty() ? "" : ",") + "t=" + t->to_string();
  return out;
}

void Bindings::assign(std::string_view assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ParseError("specialization must look like q=<scalar>");
  std::string var(assignment.substr(0, eq));
  while (!var.empty() && std::isspace(static_cast<unsigned char>(var.back()))) var.pop_back();
  while (!var.empty() && std::isspace(static_cast<unsigned char>(var.front()))) var.erase(var.begin());
  Scalar value = Scalar::parse(assignment.substr(eq + 1));
  if (var == "q")
    q = value;
  else if (var == "t")
    t = value;
  else
    throw ParseError("unknown variable '" + var + "' in specialization");
}

Scalar evaluate(const IntPoly& p, const Scalar& q_value, const Scalar& t_value) {
  if (p.is_zero()) return Scalar();
  std::vector<Scalar> qpow{Scalar(1)}, tpow{Scalar(1)};
  for (int i = 1; i <= p.deg_q(); ++i) qpow.push_back(qpow.back() * q_value);
  for (int j = 1; j <= p.deg_t(); ++j) tpow.push_back(tpow.back() * t_value);
  Scalar acc;
  for (const auto& term : p.terms()) acc += Scalar(term.coeff) * qpow[term.deg_q] * tpow[term.deg_t];
  return acc;
}

Scalar specialize(const Scalar& a, const Bindings& b) {
  if (b.empty()) return a;
  const Scalar qv = b.q ? *b.q : Scalar::q();
  const Scalar tv = b.t ? *b.t : Scalar::t();
  Scalar d = evaluate(a.den(), qv, tv);
  if (d.is_zero())
    throw SpecializationError("denominator of " + a.to_string() + " vanishes under " + b.to_string());
  return evaluate(a.num(), qv, tv) / d;
}

}  // namespace fockbridge
