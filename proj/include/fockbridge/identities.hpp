#pragma once

// Executable checks of the identities relating a Heisenberg representation
// to its generating functions.  Failures are recorded, never thrown.

#include <string>
#include <vector>

#include "json.hpp"

#include "fockbridge/heisenberg.hpp"

namespace fockbridge {

struct Failure {
  std::string instance;
  std::string lhs;
  std::string rhs;
};

class VerifyReport {
 public:
  explicit VerifyReport(std::string identity) : identity_(std::move(identity)) {}

  const std::string& identity() const { return identity_; }
  bool passed() const { return failures_.empty(); }
  /// (identity name, instance) for every instance examined.
  const std::vector<std::pair<std::string, std::string>>& checked() const { return checked_; }
  const std::vector<Failure>& failures() const { return failures_; }

  template <typename T>
  bool check(const std::string& instance, const T& lhs, const T& rhs) {
    return record(instance, lhs == rhs, [&] { return lhs.to_string(); }, [&] { return rhs.to_string(); });
  }
  bool check_states(const Rep& rep, const std::string& instance, const StateVec& lhs, const StateVec& rhs) {
    return record(instance, lhs == rhs, [&] { return lhs.to_string(rep); }, [&] { return rhs.to_string(rep); });
  }
  /// Records a computation that could not be carried out.
  void error(const std::string& instance, const std::string& what);
  void merge(const VerifyReport& other);

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  template <typename L, typename R>
  bool record(const std::string& instance, bool ok, L&& lhs, R&& rhs) {
    checked_.emplace_back(identity_, instance);
    if (!ok) failures_.push_back({instance, lhs(), rhs()});
    return ok;
  }

  std::string identity_;
  std::vector<std::pair<std::string, std::string>> checked_;
  std::vector<Failure> failures_;
};

/// [B_k, B_{-l}] = k a_k delta_{kl} and same-sign commutators vanish, for
/// 1 <= k, l <= k_max on basis vectors of degree <= d_max.
VerifyReport verify_heisenberg(const Rep& rep, const HeisenbergParams& a, int k_max, int d_max);
VerifyReport verify_heisenberg(const Rep& rep, int k_max, int d_max);

/// The four Pieri identities for 1 <= k <= k_max, deg s <= d_max.
VerifyReport verify_pieri(const Rep& rep, const HeisenbergParams& a, int k_max, int d_max);
VerifyReport verify_pieri(const Rep& rep, int k_max, int d_max);

/// D_b U_a = sum_{j <= min(a,b)} h_j<a_i> U_{a-j} D_{b-j} on degree <= d_max.
VerifyReport verify_du(const Rep& rep, const HeisenbergParams& a, int ab_max, int d_max);
VerifyReport verify_du(const Rep& rep, int ab_max, int d_max);

/// Skew Cauchy identity in x_1..x_{x_count}, y_1..y_{y_count}, keeping the
/// monomials of degree <= d_max in the x's and in the y's.
VerifyReport verify_cauchy(const Rep& rep, const HeisenbergParams& a, int x_count, int y_count, int d_max,
                           const BasisIndex& t, const BasisIndex& r);
VerifyReport verify_cauchy(const Rep& rep, int x_count, int y_count, int d_max, const BasisIndex& t,
                           const BasisIndex& r);

/// Phi(B_l v_s) = B_l Phi(v_s) for l in l_set, deg s <= d_max.
VerifyReport verify_bf(const Rep& rep, const HeisenbergParams& a, int d_max, const std::vector<int>& l_set);
VerifyReport verify_bf(const Rep& rep, int d_max, const std::vector<int>& l_set);

struct DegreeIndependence {
  int degree;
  int dimension;
  int rank;
  bool independent() const { return rank == dimension; }
};

/// Which conditions of the converse theorem hold on a truncation:
/// (1) the B'_k built from U'_k, D'_k satisfy the relations of H[a_i],
/// (2) the Pieri identities, (3) the Cauchy identity in d_max + d_max
/// variables.  Commutation of the U'_k and of the D'_k and the D_b U_a
/// relation are reported alongside.
struct ConverseReport {
  VerifyReport heisenberg{"heisenberg"};
  VerifyReport commute_U{"commute_U"};
  VerifyReport commute_D{"commute_D"};
  VerifyReport du{"du"};
  VerifyReport pieri{"genPieri"};
  VerifyReport cauchy{"genCauchy"};
  std::vector<DegreeIndependence> independence;

  bool independent() const;
  bool condition1() const { return heisenberg.passed(); }
  bool condition2() const { return pieri.passed(); }
  bool condition3() const { return cauchy.passed(); }
  /// All three conditions agree, as the theorem predicts under independence.
  bool equivalent() const { return condition1() == condition2() && condition2() == condition3(); }
  /// Everything holds.
  bool passed() const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Throws Error when the representation does not reach degree
/// d_max + 2 m k_max, which the checks need.
ConverseReport diagnose_converse(const Rep& rep, const HeisenbergParams& a, int d_max, int k_max);

}  // namespace fockbridge
