#pragma once

// Representations of a Heisenberg algebra H[a_i] with an orthonormal
// distinguished basis, and the symmetric functions F_{s/t}, G_{s/t} they
// produce.
//
// A representation supplies either the generators B_k (k != 0) or the
// raising/lowering families U_k, D_k (k >= 1).  Whatever is missing is
// derived here: U_k = sum_{lambda |- k} z_lambda^{-1} B_{-lambda} from the B's,
// or B_{-k} = k U_k - sum_{i<k} U_{k-i} B_{-i} (Newton) from the U's, and
// symmetrically for D_k and B_k.  Every derived action is memoized per
// (operator, k, basis index) in the representation's ActionCache.

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "fockbridge/params.hpp"
#include "fockbridge/partition.hpp"
#include "fockbridge/scalar.hpp"
#include "fockbridge/symfunc.hpp"

namespace fockbridge {

/// Opaque, totally ordered label of a distinguished basis vector.  Each
/// representation defines its own encoding.
struct BasisIndex {
  std::vector<int> code;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

BasisIndex partition_index(const Partition& lambda);
Partition index_partition(const BasisIndex& idx);

class Rep;

/// Finite K-linear combination of distinguished basis vectors.
class StateVec {
 public:
  using Terms = std::map<BasisIndex, Scalar>;

  StateVec() = default;
  static StateVec basis(const BasisIndex& idx, const Scalar& c = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// <v, v_idx> for the orthonormal basis.
  Scalar coeff(const BasisIndex& idx) const;

  void add_term(const BasisIndex& idx, const Scalar& c);
  /// this += c * v
  void axpy(const Scalar& c, const StateVec& v);

  StateVec& operator+=(const StateVec& v) {
    axpy(Scalar(1), v);
    return *this;
  }
  StateVec& operator-=(const StateVec& v) {
    axpy(Scalar(-1), v);
    return *this;
  }
  friend StateVec operator+(StateVec a, const StateVec& b) { return a += b; }
  friend StateVec operator-(StateVec a, const StateVec& b) { return a -= b; }
  friend StateVec operator*(const Scalar& c, const StateVec& v);
  friend bool operator==(const StateVec&, const StateVec&) = default;

  std::string to_string(const Rep& rep) const;

 private:
  Terms terms_;
};

/// Memo tables for derived actions.  Readers share, writers exclude; an entry
/// never changes once inserted.
class ActionCache {
 public:
  enum class Op : char { B = 'B', U = 'U', D = 'D' };

  const StateVec* find(Op op, int k, const BasisIndex& idx) const;
  const StateVec& insert(Op op, int k, const BasisIndex& idx, StateVec v);

  const StateVec* find_word(int sign, const Partition& word, const BasisIndex& idx) const;
  const StateVec& insert_word(int sign, const Partition& word, const BasisIndex& idx, StateVec v);

 private:
  mutable std::shared_mutex mu_;
  std::map<std::tuple<Op, int, BasisIndex>, std::unique_ptr<StateVec>> actions_;
  std::map<std::tuple<int, Partition, BasisIndex>, std::unique_ptr<StateVec>> words_;
};

class Rep {
 public:
  virtual ~Rep() = default;

  virtual std::string name() const = 0;
  virtual const HeisenbergParams& params() const = 0;
  /// m with deg(B_k) = -m k.
  virtual int degree_step() const = 0;
  virtual int degree(const BasisIndex& idx) const = 0;
  virtual std::vector<BasisIndex> basis_of_degree(int d) const = 0;
  virtual int min_degree() const { return 0; }
  /// A highest weight vector: B_k v = 0 for all k > 0.
  virtual BasisIndex highest() const = 0;

  virtual bool provides_B() const { return false; }
  virtual bool provides_UD() const { return false; }
  virtual StateVec raw_B(int k, const BasisIndex& idx) const;
  virtual StateVec raw_U(int k, const BasisIndex& idx) const;
  virtual StateVec raw_D(int k, const BasisIndex& idx) const;

  virtual std::string label(const BasisIndex& idx) const = 0;
  virtual BasisIndex parse_index(std::string_view text) const = 0;

  ActionCache& cache() const { return cache_; }

 private:
  mutable ActionCache cache_;
};

using RepPtr = std::shared_ptr<const Rep>;

/// B_k on a basis vector (memoized).  Throws Error for k = 0.
const StateVec& apply_B(const Rep& rep, int k, const BasisIndex& idx);
StateVec apply_B(const Rep& rep, int k, const StateVec& v);
/// U_k, D_k for k >= 1; k = 0 is the identity.
const StateVec& apply_U(const Rep& rep, int k, const BasisIndex& idx);
StateVec apply_U(const Rep& rep, int k, const StateVec& v);
const StateVec& apply_D(const Rep& rep, int k, const BasisIndex& idx);
StateVec apply_D(const Rep& rep, int k, const StateVec& v);

/// B_{sign*w_1} ... B_{sign*w_l} v_idx, rightmost factor applied first.
const StateVec& apply_word(const Rep& rep, int sign, const Partition& word, const BasisIndex& idx);

/// Degree of F_{s/t} and G_{s/t}: (deg s - deg t)/m, or nullopt when that
/// is negative or not an integer.
std::optional<int> skew_degree(const Rep& rep, const BasisIndex& s, const BasisIndex& t);

/// F_{s/t} = sum_{lambda} z_lambda^{-1} <B_{-lambda} v_t, v_s> p_lambda.
SymFunc compute_F(const Rep& rep, const BasisIndex& s, const BasisIndex& t);
/// G_{s/t} = sum_{lambda} z_lambda^{-1} <B_lambda v_s, v_t> p_lambda.
SymFunc compute_G(const Rep& rep, const BasisIndex& s, const BasisIndex& t);

/// <U_{alpha_l} ... U_{alpha_1} v_t, v_s>: the x^alpha coefficient of F_{s/t}.
Scalar monomial_coeff(const Rep& rep, const BasisIndex& s, const BasisIndex& t, const std::vector<int>& alpha);
/// <D_{alpha_l} ... D_{alpha_1} v_s, v_t>: the x^alpha coefficient of G_{s/t}.
Scalar monomial_coeff_G(const Rep& rep, const BasisIndex& s, const BasisIndex& t, const std::vector<int>& alpha);

/// Phi(v) = sum_s <v, v_s> G_{s/b} with b the highest index.
SymFunc phi_map(const Rep& rep, const StateVec& v);

/// Action of H[a_i] on Lambda_K: B_{-k} multiplies by a_k p_k and B_k acts
/// as k d/dp_k.  Result in the p basis.
SymFunc bosonic_apply(int k, const SymFunc& f, const HeisenbergParams& a);

/// The adjoint action: <theta(B_k) v_s', v_s> = <v_s', B_{-k} v_s>.
/// F and G swap roles on the result.
RepPtr adjoint(RepPtr rep);

}  // namespace fockbridge
