#include "fockbridge/scalar.hpp"

#include <algorithm>
#include <cassert>

namespace fockbridge {

namespace {

using UPoly = IntPoly::Row;
using BPoly = std::vector<UPoly>;

void u_trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void b_trim(BPoly& a) {
  for (auto& r : a) u_trim(r);
  while (!a.empty() && a.back().empty()) a.pop_back();
}

mpz_class u_content(const UPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class u_maxnorm(const UPoly& a) {
  mpz_class m = 0;
  for (const auto& c : a)
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  return m;
}

mpz_class b_maxnorm(const BPoly& a) {
  mpz_class m = 0;
  for (const auto& r : a)
    for (const auto& c : r)
      if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  return m;
}

mpz_class b_content(const BPoly& a) {
  mpz_class g = 0;
  for (const auto& r : a) {
    for (const auto& c : r) {
      if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return g;
    }
  }
  return g;
}

void u_divexact_int(UPoly& a, const mpz_class& c) {
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

void b_divexact_int(BPoly& a, const mpz_class& c) {
  for (auto& r : a) u_divexact_int(r, c);
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  u_trim(r);
  return r;
}

void u_addmul_shift(UPoly& acc, const UPoly& a, const mpz_class& c, std::size_t shift, bool subtract) {
  if (acc.size() < a.size() + shift) acc.resize(a.size() + shift);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (subtract)
      acc[i + shift] -= c * a[i];
    else
      acc[i + shift] += c * a[i];
  }
}

void u_add_into(UPoly& acc, const UPoly& a) {
  if (acc.size() < a.size()) acc.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) acc[i] += a[i];
}

void u_sub_into(UPoly& acc, const UPoly& a) {
  if (acc.size() < a.size()) acc.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) acc[i] -= a[i];
}

mpz_class u_eval(const UPoly& a, const mpz_class& x) {
  mpz_class r = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    r *= x;
    r += a[i];
  }
  return r;
}

// Exact division in Z[x]; false when b does not divide a.
bool u_divexact(UPoly a, const UPoly& b, UPoly& quot) {
  assert(!b.empty());
  u_trim(a);
  quot.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  quot.assign(a.size() - b.size() + 1, 0);
  const mpz_class& lb = b.back();
  mpz_class c;
  while (!a.empty() && a.size() >= b.size()) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    std::size_t shift = a.size() - b.size();
    quot[shift] = c;
    u_addmul_shift(a, b, c, shift, true);
    u_trim(a);
  }
  if (!a.empty()) return false;
  u_trim(quot);
  return true;
}

UPoly u_prem(UPoly a, const UPoly& b) {
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    mpz_class la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    u_addmul_shift(a, b, la, shift, true);
    u_trim(a);
  }
  return a;
}

void u_make_primitive(UPoly& a) {
  mpz_class c = u_content(a);
  if (c > 1) u_divexact_int(a, c);
  if (!a.empty() && a.back() < 0)
    for (auto& x : a) x = -x;
}

mpz_class smod(const mpz_class& c, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

// Digits of c in balanced base xi, least significant first.
std::vector<mpz_class> balanced_digits(mpz_class c, const mpz_class& xi) {
  std::vector<mpz_class> out;
  while (c != 0) {
    mpz_class d = smod(c, xi);
    out.push_back(d);
    c -= d;
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
  }
  return out;
}

void grow_xi(mpz_class& xi) {
  xi = xi * 73794 / 27011;
}

UPoly u_gcd(const UPoly& a, const UPoly& b);

UPoly u_gcd_prs(UPoly a, UPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return {1};
    UPoly r = u_prem(a, b);
    a = std::move(b);
    b = std::move(r);
    u_make_primitive(b);
  }
  u_make_primitive(a);
  return a;
}

// Heuristic gcd of primitive a, b; verified by trial division.
std::optional<UPoly> u_gcd_heuristic(const UPoly& a, const UPoly& b) {
  mpz_class xi = 2 * std::min(u_maxnorm(a), u_maxnorm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt, grow_xi(xi)) {
    mpz_class va = u_eval(a, xi), vb = u_eval(b, xi);
    if (va == 0 || vb == 0) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    UPoly cand = balanced_digits(g, xi);
    u_make_primitive(cand);
    if (cand.empty()) continue;
    UPoly quot;
    if (u_divexact(a, cand, quot) && u_divexact(b, cand, quot)) return cand;
  }
  return std::nullopt;
}

// Full gcd in Z[x], positive leading coefficient.
UPoly u_gcd(const UPoly& a, const UPoly& b) {
  if (a.empty()) {
    UPoly r = b;
    if (!r.empty() && r.back() < 0)
      for (auto& x : r) x = -x;
    return r;
  }
  if (b.empty()) return u_gcd(b, a);
  mpz_class ca = u_content(a), cb = u_content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.size() == 1 || b.size() == 1) return {c};
  UPoly pa = a, pb = b;
  u_make_primitive(pa);
  u_make_primitive(pb);
  UPoly g;
  if (pa == pb) {
    g = pa;
  } else if (auto h = u_gcd_heuristic(pa, pb)) {
    g = std::move(*h);
  } else {
    g = u_gcd_prs(pa, pb);
  }
  if (c != 1)
    for (auto& x : g) x *= c;
  return g;
}

UPoly b_eval_t(const BPoly& a, const mpz_class& x) {
  std::size_t width = 0;
  for (const auto& r : a) width = std::max(width, r.size());
  UPoly out(width, 0);
  for (std::size_t j = a.size(); j-- > 0;) {
    for (auto& c : out) c *= x;
    for (std::size_t i = 0; i < a[j].size(); ++i) out[i] += a[j][i];
  }
  u_trim(out);
  return out;
}

BPoly b_mul(const BPoly& a, const BPoly& b) {
  if (a.empty() || b.empty()) return {};
  BPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].empty()) continue;
      UPoly& acc = r[i + j];
      if (acc.size() < a[i].size() + b[j].size() - 1) acc.resize(a[i].size() + b[j].size() - 1);
      for (std::size_t x = 0; x < a[i].size(); ++x) {
        if (a[i][x] == 0) continue;
        for (std::size_t y = 0; y < b[j].size(); ++y) acc[x + y] += a[i][x] * b[j][y];
      }
    }
  }
  b_trim(r);
  return r;
}

// Exact division in Z[q][t].
bool b_divexact(BPoly a, const BPoly& b, BPoly& quot) {
  assert(!b.empty());
  b_trim(a);
  quot.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  // Quick degree-in-q feasibility check on the leading rows.
  quot.assign(a.size() - b.size() + 1, {});
  const UPoly& lb = b.back();
  UPoly c;
  while (!a.empty() && a.size() >= b.size()) {
    if (!u_divexact(a.back(), lb, c)) return false;
    std::size_t shift = a.size() - b.size();
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].empty()) continue;
      u_sub_into(a[j + shift], u_mul(c, b[j]));
    }
    b_trim(a);
  }
  if (!a.empty()) return false;
  b_trim(quot);
  return true;
}

// Normalize sign so that the lex-leading coefficient (max q-degree, then max
// t-degree) is positive.
void b_normalize_sign(BPoly& a) {
  if (a.empty()) return;
  std::size_t best_q = 0;
  for (const auto& r : a) best_q = std::max(best_q, r.size());
  for (std::size_t j = a.size(); j-- > 0;) {
    if (a[j].size() == best_q) {
      if (a[j].back() < 0)
        for (auto& r : a)
          for (auto& x : r) x = -x;
      return;
    }
  }
}

UPoly t_content(const BPoly& a) {
  UPoly g;
  for (const auto& r : a) {
    if (r.empty()) continue;
    g = u_gcd(g, r);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

BPoly b_divide_rows(const BPoly& a, const UPoly& c) {
  BPoly out;
  out.reserve(a.size());
  for (const auto& r : a) {
    UPoly q;
    if (!r.empty()) {
      bool ok = u_divexact(r, c, q);
      assert(ok);
      (void)ok;
    }
    out.push_back(std::move(q));
  }
  b_trim(out);
  return out;
}

BPoly b_prem(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    UPoly la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& r : a) r = u_mul(r, lb);
    for (std::size_t j = 0; j < b.size(); ++j) u_sub_into(a[j + shift], u_mul(la, b[j]));
    b_trim(a);
  }
  return a;
}

BPoly b_gcd_prs(const BPoly& a0, const BPoly& b0) {
  UPoly ca = t_content(a0), cb = t_content(b0);
  UPoly c = u_gcd(ca, cb);
  BPoly a = b_divide_rows(a0, ca), b = b_divide_rows(b0, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {
      a = {{1}};
      break;
    }
    BPoly r = b_prem(a, b);
    a = std::move(b);
    if (r.empty()) {
      b.clear();
      break;
    }
    b = b_divide_rows(r, t_content(r));
  }
  a = b_divide_rows(a, t_content(a));
  BPoly out;
  for (const auto& r : a) out.push_back(u_mul(r, c));
  b_trim(out);
  return out;
}

// Heuristic gcd of integer-primitive a, b, evaluating t at a large integer.
std::optional<BPoly> b_gcd_heuristic(const BPoly& a, const BPoly& b) {
  mpz_class xi = 2 * std::min(b_maxnorm(a), b_maxnorm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt, grow_xi(xi)) {
    UPoly va = b_eval_t(a, xi), vb = b_eval_t(b, xi);
    if (va.empty() || vb.empty()) continue;
    UPoly g = u_gcd(va, vb);
    BPoly cand;
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto digits = balanced_digits(g[i], xi);
      if (cand.size() < digits.size()) cand.resize(digits.size());
      for (std::size_t j = 0; j < digits.size(); ++j) {
        if (cand[j].size() <= i) cand[j].resize(i + 1, 0);
        cand[j][i] = digits[j];
      }
    }
    b_trim(cand);
    if (cand.empty()) continue;
    mpz_class ct = b_content(cand);
    if (ct > 1) b_divexact_int(cand, ct);
    BPoly quot;
    if (b_divexact(a, cand, quot) && b_divexact(b, cand, quot)) return cand;
  }
  return std::nullopt;
}

}  // namespace

IntPoly::IntPoly(long c) {
  if (c != 0) rows_.push_back({mpz_class(c)});
}

IntPoly::IntPoly(const mpz_class& c) {
  if (c != 0) rows_.push_back({c});
}

IntPoly IntPoly::monomial(const mpz_class& c, int deg_q, int deg_t) {
  IntPoly p;
  if (c == 0) return p;
  p.rows_.resize(deg_t + 1);
  p.rows_[deg_t].assign(deg_q + 1, 0);
  p.rows_[deg_t][deg_q] = c;
  return p;
}

IntPoly IntPoly::from_rows(std::vector<Row> rows) {
  IntPoly p;
  p.rows_ = std::move(rows);
  p.normalize();
  return p;
}

void IntPoly::normalize() { b_trim(rows_); }

bool IntPoly::is_one() const { return rows_.size() == 1 && rows_[0].size() == 1 && rows_[0][0] == 1; }

mpz_class IntPoly::constant_value() const {
  if (rows_.empty() || rows_[0].empty()) return 0;
  return rows_[0][0];
}

int IntPoly::deg_q() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, static_cast<int>(r.size()) - 1);
  return d;
}

mpz_class IntPoly::coeff(int dq, int dt) const {
  if (dt < 0 || dq < 0 || dt >= static_cast<int>(rows_.size())) return 0;
  const auto& r = rows_[dt];
  return dq < static_cast<int>(r.size()) ? r[dq] : mpz_class(0);
}

std::size_t IntPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_)
    for (const auto& c : r)
      if (c != 0) ++n;
  return n;
}

std::vector<IntPoly::Term> IntPoly::terms() const {
  std::vector<Term> out;
  for (std::size_t j = 0; j < rows_.size(); ++j)
    for (std::size_t i = 0; i < rows_[j].size(); ++i)
      if (rows_[j][i] != 0) out.push_back({static_cast<int>(i), static_cast<int>(j), rows_[j][i]});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return a.deg_q != b.deg_q ? a.deg_q > b.deg_q : a.deg_t > b.deg_t;
  });
  return out;
}

const mpz_class& IntPoly::lex_leading_coeff() const {
  static const mpz_class zero = 0;
  if (rows_.empty()) return zero;
  std::size_t best_q = 0;
  for (const auto& r : rows_) best_q = std::max(best_q, r.size());
  for (std::size_t j = rows_.size(); j-- > 0;)
    if (rows_[j].size() == best_q) return rows_[j].back();
  return zero;
}

mpz_class IntPoly::content() const { return b_content(rows_); }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& row : r.rows_)
    for (auto& c : row) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t j = 0; j < o.rows_.size(); ++j) u_add_into(rows_[j], o.rows_[j]);
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t j = 0; j < o.rows_.size(); ++j) u_sub_into(rows_[j], o.rows_[j]);
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.rows_ = b_mul(a.rows_, b.rows_);
  return r;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  IntPoly r = *this;
  for (auto& row : r.rows_)
    for (auto& x : row) x *= c;
  return r;
}

IntPoly IntPoly::divexact(const mpz_class& c) const {
  IntPoly r = *this;
  b_divexact_int(r.rows_, c);
  return r;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (d.is_constant()) {
    const mpz_class c = d.constant_value();
    for (const auto& r : rows_)
      for (const auto& x : r)
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    return divexact(c);
  }
  BPoly quot;
  if (!b_divexact(rows_, d.rows_, quot)) return std::nullopt;
  return IntPoly::from_rows(std::move(quot));
}

std::string IntPoly::to_string() const {
  auto ts = terms();
  if (ts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : ts) {
    const bool neg = term.coeff < 0;
    mpz_class mag = abs(term.coeff);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    auto power = [](char v, int e) {
      std::string s(1, v);
      if (e > 1) s += "^" + std::to_string(e);
      return s;
    };
    if (term.deg_q > 0) mono += power('q', term.deg_q);
    if (term.deg_t > 0) mono += (mono.empty() ? "" : "*") + power('t', term.deg_t);
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    BPoly r = a.is_zero() ? b.rows() : a.rows();
    b_normalize_sign(r);
    return IntPoly::from_rows(std::move(r));
  }
  mpz_class ca = a.content(), cb = b.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return IntPoly(c);
  BPoly pa = a.rows(), pb = b.rows();
  if (ca > 1) b_divexact_int(pa, ca);
  if (cb > 1) b_divexact_int(pb, cb);
  b_normalize_sign(pa);
  b_normalize_sign(pb);
  BPoly g;
  if (pa == pb) {
    g = std::move(pa);
  } else if (pa.size() == 1 && pb.size() == 1) {
    g = {u_gcd(pa[0], pb[0])};
  } else if (auto h = b_gcd_heuristic(pa, pb)) {
    g = std::move(*h);
  } else {
    g = b_gcd_prs(pa, pb);
  }
  b_normalize_sign(g);
  if (c != 1)
    for (auto& r : g)
      for (auto& x : r) x *= c;
  return IntPoly::from_rows(std::move(g));
}

namespace detail {

// Exposed for tests: the fallback path, bypassing the heuristic.
IntPoly gcd_prs(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return gcd(a, b);
  mpz_class ca = a.content(), cb = b.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  BPoly pa = a.rows(), pb = b.rows();
  b_divexact_int(pa, ca);
  b_divexact_int(pb, cb);
  BPoly g = b_gcd_prs(pa, pb);
  b_normalize_sign(g);
  for (auto& r : g)
    for (auto& x : r) x *= c;
  return IntPoly::from_rows(std::move(g));
}

}  // namespace detail

}  // namespace fockbridge
