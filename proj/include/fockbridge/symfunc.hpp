#pragma once

// The graded ring of symmetric functions over K, stored sparsely in one of
// the p, h, m, s bases.

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "fockbridge/linalg.hpp"
#include "fockbridge/params.hpp"
#include "fockbridge/partition.hpp"
#include "fockbridge/scalar.hpp"

namespace fockbridge {

enum class Basis { p, h, m, s };

char basis_char(Basis b);
Basis parse_basis(std::string_view name);

class SymFunc {
 public:
  using Terms = std::map<Partition, Scalar>;

  explicit SymFunc(Basis basis = Basis::p) : basis_(basis) {}
  SymFunc(Basis basis, Terms terms);

  static SymFunc one(Basis basis = Basis::p) { return element(basis, Partition()); }
  static SymFunc element(Basis basis, const Partition& lambda, const Scalar& c = Scalar(1));

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Partition& lambda) const;
  /// Largest |lambda| in the support, -1 for zero.
  int max_degree() const;
  SymFunc homogeneous_part(int d) const;
  /// True when every term has degree d (vacuously true for zero).
  bool is_homogeneous(int d) const;

  void add_term(const Partition& lambda, const Scalar& c);

  /// Adds g after converting it to this basis.
  SymFunc& operator+=(const SymFunc& g);
  SymFunc& operator-=(const SymFunc& g);
  SymFunc operator-() const;
  friend SymFunc operator+(SymFunc f, const SymFunc& g) { return f += g; }
  friend SymFunc operator-(SymFunc f, const SymFunc& g) { return f -= g; }
  friend SymFunc operator*(const Scalar& c, const SymFunc& f);

  /// Structural equality; use same_element() to compare across bases.
  friend bool operator==(const SymFunc&, const SymFunc&) = default;

  SymFunc specialized(const Bindings& b) const;

  /// Terms in reverse-lexicographic order, e.g. "s[2] + 2*s[1,1]".
  std::string to_string() const;

 private:
  Basis basis_;
  Terms terms_;
};

/// Per-degree transition matrices between bases, computed exactly on demand.
/// Row i of matrix(from, to, d) expands the i-th basis element of `from`
/// (partitions_of(d) order) in the `to` basis.
class TransitionCache {
 public:
  static TransitionCache& instance();

  const ScalarMatrix& matrix(Basis from, Basis to, int d);

  int degree_cap() const { return degree_cap_; }
  void set_degree_cap(int cap);

 private:
  TransitionCache() = default;
  std::shared_ptr<const ScalarMatrix> build(Basis from, Basis to, int d);

  std::shared_mutex mu_;
  std::map<std::tuple<Basis, Basis, int>, std::shared_ptr<const ScalarMatrix>> cache_;
  int degree_cap_ = 8;
};

/// h_k in the h basis; h_0 = 1.
SymFunc complete_h(int k);

SymFunc convert(const SymFunc& f, Basis target);
bool same_element(const SymFunc& f, const SymFunc& g);

/// Product in the p basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);
Scalar hall_inner(const SymFunc& f, const SymFunc& g);
/// g^perp(f), the adjoint of multiplication by g, returned in f's basis.
SymFunc perp_apply(const SymFunc& g, const SymFunc& f);

/// Algebra map p_k -> a_k p_k; result in the p basis.
SymFunc theta_apply(const SymFunc& f, const HeisenbergParams& a);
/// Specialization p_k -> a_k.
Scalar kappa_eval(const SymFunc& f, const HeisenbergParams& a);

/// Kostka-style count: number of chains inner = l0 < l1 < ... < l_r = outer
/// of horizontal strips with |l_i / l_{i-1}| = weight_i.
mpz_class tableaux_count(const SkewShape& shape, const std::vector<int>& weight);
/// Enumerates those chains.
std::vector<std::vector<Partition>> tableaux_chains(const SkewShape& shape, const std::vector<int>& weight);

/// Skew Schur function as the generating function of semistandard tableaux,
/// in the m basis.
SymFunc schur_tableaux(const SkewShape& shape);

/// Polynomial in named commuting variables with Scalar coefficients.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  static MultiPoly constant(std::vector<std::string> vars, const Scalar& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Scalar& c);
  /// Re-expresses over `vars`, which must include every variable used.
  MultiPoly over(const std::vector<std::string>& vars) const;
  MultiPoly truncated(const std::function<bool(const Exponents&)>& keep) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, Scalar> terms_;
};

/// Substitutes x_i = vars_i for i <= len(vars) and x_i = 0 beyond.
MultiPoly evaluate_vars(const SymFunc& f, const std::vector<std::string>& vars);

}  // namespace fockbridge
