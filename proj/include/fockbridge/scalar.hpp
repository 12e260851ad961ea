#pragma once

// Exact coefficient field K = Q(q, t).
//
// IntPoly is an integer polynomial in q and t stored densely as rows indexed
// by the t-degree, each row a coefficient vector in q.  Scalar is a reduced
// fraction of two IntPolys; two Scalars are equal iff their canonical forms
// are structurally equal.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fockbridge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct SpecializationError : Error {
  using Error::Error;
};

class IntPoly {
 public:
  struct Term {
    int deg_q;
    int deg_t;
    mpz_class coeff;
  };

  using Row = std::vector<mpz_class>;

  IntPoly() = default;
  explicit IntPoly(long c);
  explicit IntPoly(const mpz_class& c);

  static IntPoly monomial(const mpz_class& c, int deg_q, int deg_t);
  static IntPoly from_rows(std::vector<Row> rows);

  bool is_zero() const { return rows_.empty(); }
  bool is_constant() const { return rows_.size() <= 1 && (rows_.empty() || rows_[0].size() <= 1); }
  bool is_one() const;
  /// Constant term; only meaningful when is_constant().
  mpz_class constant_value() const;

  int deg_q() const;
  int deg_t() const { return static_cast<int>(rows_.size()) - 1; }
  mpz_class coeff(int deg_q, int deg_t) const;
  std::size_t term_count() const;

  /// Nonzero terms sorted by (deg_q, deg_t) descending.
  std::vector<Term> terms() const;

  /// Coefficient of the leading term under lex order with q > t.
  const mpz_class& lex_leading_coeff() const;

  /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
  mpz_class content() const;

  const std::vector<Row>& rows() const { return rows_; }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(const mpz_class& c) const;
  /// Divide every coefficient by c, which must divide all of them.
  IntPoly divexact(const mpz_class& c) const;

  /// Quotient if `d` divides *this in Z[q,t], otherwise nullopt.
  std::optional<IntPoly> divide_exact(const IntPoly& d) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Row> rows_;
};

/// Greatest common divisor in Z[q,t], normalized to a positive lex-leading
/// coefficient.  gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

namespace detail {
/// Primitive remainder sequence gcd; the fallback behind gcd().
IntPoly gcd_prs(const IntPoly& a, const IntPoly& b);
}  // namespace detail

class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpz_class& c) : num_(c), den_(1) {}
  explicit Scalar(const mpq_class& c);

  /// Canonical num/den; throws DivisionByZero when den is zero.
  static Scalar fraction(const IntPoly& num, const IntPoly& den);
  static Scalar from_poly(IntPoly p);
  static Scalar q();
  static Scalar t();
  static Scalar parse(std::string_view text);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value lies in Q (no q or t present).
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class to_rational() const;
  /// True when the denominator is 1, i.e. the value is in Z[q,t].
  bool is_polynomial() const { return den_.is_one(); }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(int e) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar&, const Scalar&) = default;

  std::string to_string() const;

 private:
  Scalar(IntPoly num, IntPoly den, int /*trusted*/) : num_(std::move(num)), den_(std::move(den)) {}
  static Scalar canonical(IntPoly num, IntPoly den);

  IntPoly num_;
  IntPoly den_;
};

enum class ArithOp { add, sub, mul, div };

Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b);

/// Partial substitution of the formal variables.
struct Bindings {
  std::optional<Scalar> q;
  std::optional<Scalar> t;

  bool empty() const { return !q && !t; }
  std::string to_string() const;
  /// Parses "q=0", "t=q", ... ; repeated assignments accumulate.
  void assign(std::string_view assignment);
};

/// Exact substitution followed by canonicalization.  Throws
/// SpecializationError naming the binding when the denominator vanishes.
Scalar specialize(const Scalar& a, const Bindings& b);

Scalar evaluate(const IntPoly& p, const Scalar& q_value, const Scalar& t_value);

}  // namespace fockbridge
