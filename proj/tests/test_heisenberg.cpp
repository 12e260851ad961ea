#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "fockbridge/reps.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fbtest;

namespace {

StateVec v(const std::string& lambda) { return StateVec::basis(I(lambda)); }

std::vector<BasisIndex> basis_up_to(const Rep& rep, int d) {
  std::vector<BasisIndex> out;
  for (int e = rep.min_degree(); e <= d; ++e)
    for (const auto& b : rep.basis_of_degree(e)) out.push_back(b);
  return out;
}

void check_relations(const Rep& rep, int k_max, int d_max) {
  for (const auto& b : basis_up_to(rep, d_max)) {
    const StateVec x = StateVec::basis(b);
    for (int k = 1; k <= k_max; ++k) {
      for (int l = 1; l <= k_max; ++l) {
        const StateVec mixed = apply_B(rep, k, apply_B(rep, -l, x)) - apply_B(rep, -l, apply_B(rep, k, x));
        const StateVec expected = k == l ? (Scalar(k) * rep.params().a(k)) * x : StateVec();
        CHECK_MESSAGE(mixed == expected, rep.name() << " [B_" << k << ", B_-" << l << "] on " << rep.label(b));
        if (k < l) {
          CHECK(apply_B(rep, k, apply_B(rep, l, x)) == apply_B(rep, l, apply_B(rep, k, x)));
          CHECK(apply_B(rep, -k, apply_B(rep, -l, x)) == apply_B(rep, -l, apply_B(rep, -k, x)));
        }
      }
    }
  }
}

std::vector<std::vector<int>> compositions(int d) {
  if (d == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = 1; first <= d; ++first)
    for (auto rest : compositions(d - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

}  // namespace

TEST_CASE("B_k on the fermionic vacuum") {
  const auto& F = *fermionic_rep();
  CHECK(apply_B(F, 1, v("[]")).is_zero());
  CHECK(apply_B(F, -1, v("[]")) == v("[1]"));
  CHECK(apply_B(F, -2, v("[]")) == v("[2]") - v("[1,1]"));
  CHECK_THROWS_AS(apply_B(F, 0, v("[]")), Error);
}

TEST_CASE("U and D") {
  const auto& F = *fermionic_rep();
  CHECK(apply_U(F, 2, v("[]")) == v("[2]"));
  CHECK(apply_U(F, 2, v("[1]")) == v("[3]") + v("[2,1]"));
  CHECK(apply_D(F, 1, v("[2,1]")) == v("[2]") + v("[1,1]"));
  CHECK(apply_U(F, 0, v("[1]")) == v("[1]"));
  const auto& M = *macdonald_rep();
  CHECK(apply_D(M, 1, v("[1]")) == v("[]"));
  CHECK_THROWS_AS(apply_U(F, -1, v("[]")), Error);
}

TEST_CASE("Newton reconstruction agrees with the power sum expansion") {
  const auto& M = *macdonald_rep();
  for (const auto& b : basis_up_to(M, 3)) {
    for (int k = 1; k <= 3; ++k) {
      StateVec u;
      for (const auto& lambda : partitions_of(k)) u.axpy(z_of(lambda).inverse(), apply_word(M, -1, lambda, b));
      CHECK(u == apply_U(M, k, b));
      StateVec d;
      for (const auto& lambda : partitions_of(k)) d.axpy(z_of(lambda).inverse(), apply_word(M, 1, lambda, b));
      CHECK(d == apply_D(M, k, b));
    }
  }
}

TEST_CASE("generating functions") {
  const auto& F = *fermionic_rep();
  const auto& M = *macdonald_rep();
  CHECK(compute_F(F, I("[]"), I("[]")) == SymFunc::one());
  CHECK(convert(compute_F(F, I("[2,1]"), I("[1]")), Basis::s) ==
        SymFunc::element(Basis::s, P("[2]")) + SymFunc::element(Basis::s, P("[1,1]")));
  CHECK(compute_G(M, I("[1]"), I("[]")) == SymFunc::element(Basis::p, P("[1]")));
  CHECK(compute_F(M, I("[1]"), I("[]")) == SymFunc::element(Basis::p, P("[1]"), S("(1-t)/(1-q)")));
  CHECK(compute_F(F, I("[1]"), I("[2]")).is_zero());
  CHECK(compute_F(F, I("[2]"), I("[1,1]")).is_zero());
}

TEST_CASE("non-integral degree gives zero") {
  const auto llt = llt_q1_rep(2);
  CHECK(compute_F(*llt, I("[1]"), I("[]")).is_zero());
  CHECK(compute_G(*llt, I("[1]"), I("[]")).is_zero());
  CHECK_FALSE(compute_F(*llt, I("[2]"), I("[]")).is_zero());
}

TEST_CASE("monomial coefficients") {
  const auto& F = *fermionic_rep();
  CHECK(monomial_coeff(F, I("[2,1]"), I("[]"), {2, 1}) == Scalar(1));
  CHECK(monomial_coeff(F, I("[2,1]"), I("[]"), {1, 1, 1}) == Scalar(2));
  CHECK(monomial_coeff(F, I("[2,1]"), I("[2,1]"), {}) == Scalar(1));
  CHECK(monomial_coeff(*macdonald_rep(), I("[3,1]"), I("[3,1]"), {}) == Scalar(1));
}

TEST_CASE("monomial coefficients match the m expansion of F and G") {
  for (const auto& rep : {fermionic_rep(), macdonald_rep()}) {
    for (int d = 0; d <= 4; ++d) {
      for (int dt = 0; dt <= 1; ++dt) {
        for (const auto& t : rep->basis_of_degree(dt)) {
          for (const auto& s : rep->basis_of_degree(d + dt)) {
            const SymFunc fm = convert(compute_F(*rep, s, t), Basis::m);
            const SymFunc gm = convert(compute_G(*rep, s, t), Basis::m);
            for (const auto& alpha : compositions(d)) {
              const Partition sorted = Partition::from_unsorted(alpha);
              CHECK(monomial_coeff(*rep, s, t, alpha) == fm.coeff(sorted));
              CHECK(monomial_coeff_G(*rep, s, t, alpha) == gm.coeff(sorted));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("F is homogeneous of the skew degree") {
  for (const auto& rep : {fermionic_rep(), macdonald_rep(), llt_q1_rep(2)}) {
    for (const auto& s : basis_up_to(*rep, 4)) {
      for (const auto& t : basis_up_to(*rep, 4)) {
        const SymFunc f = compute_F(*rep, s, t);
        const auto d = skew_degree(*rep, s, t);
        if (!d) {
          CHECK(f.is_zero());
        } else {
          CHECK(f.is_homogeneous(*d));
        }
      }
    }
  }
}

TEST_CASE("Heisenberg relations: fermionic") { check_relations(*fermionic_rep(), 4, 6); }

TEST_CASE("Heisenberg relations: macdonald") { check_relations(*macdonald_rep(), 3, 5); }

TEST_CASE("Heisenberg relations: llt") { check_relations(*llt_q1_rep(2), 3, 6); }

TEST_CASE("commuting B_-k past B_lambda in the bosonic model") {
  const auto a = HeisenbergParams::macdonald();
  std::vector<SymFunc> vectors;
  for (int d = 0; d <= 3; ++d)
    for (const auto& mu : partitions_of(d)) vectors.push_back(SymFunc::element(Basis::p, mu, Scalar(d + 1)));
  auto apply_positive_word = [&](const Partition& lambda, SymFunc f) {
    for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it) f = bosonic_apply(*it, f, a);
    return f;
  };
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int k = 1; k <= 3; ++k) {
        for (const auto& f : vectors) {
          const SymFunc lhs = apply_positive_word(lambda, bosonic_apply(-k, f, a));
          SymFunc rhs = bosonic_apply(-k, apply_positive_word(lambda, f), a);
          const int mult = lambda.multiplicity(k);
          if (mult > 0)
            rhs += (Scalar(k * mult) * a.a(k)) * apply_positive_word(lambda.without_part(k), f);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("phi intertwines the action") {
  for (const auto& rep : {fermionic_rep(), macdonald_rep()}) {
    for (const auto& s : basis_up_to(*rep, 5)) {
      const SymFunc image = phi_map(*rep, StateVec::basis(s));
      for (int l : {-2, -1, 1, 2}) {
        CHECK(phi_map(*rep, apply_B(*rep, l, s)) == bosonic_apply(l, image, rep->params()));
      }
    }
  }
}

TEST_CASE("phi on basis vectors") {
  const auto& F = *fermionic_rep();
  const auto& M = *macdonald_rep();
  CHECK(phi_map(F, v("[]")) == SymFunc::one());
  CHECK(phi_map(M, v("[]")) == SymFunc::one());
  for (int d = 0; d <= 4; ++d)
    for (const auto& lambda : partitions_of(d))
      CHECK(convert(phi_map(F, StateVec::basis(partition_index(lambda))), Basis::s) == SymFunc::element(Basis::s, lambda));
  const auto P2 = gram_schmidt_P(2);
  CHECK(phi_map(M, v("[2]")) == convert(P2.at(P("[2]")), Basis::p));
  CHECK(phi_map(M, v("[2]") + v("[1,1]")) == convert(P2.at(P("[2]")) + P2.at(P("[1,1]")), Basis::p));
}

TEST_CASE("bosonic action") {
  const auto a = HeisenbergParams::macdonald();
  const SymFunc p1 = SymFunc::element(Basis::p, P("[1]"));
  CHECK(bosonic_apply(-1, SymFunc::one(), a) == SymFunc::element(Basis::p, P("[1]"), a.a(1)));
  CHECK(bosonic_apply(1, p1, a) == SymFunc::one());
  CHECK(bosonic_apply(2, SymFunc::element(Basis::p, P("[2,2,1]")), a) == SymFunc::element(Basis::p, P("[2,1]"), 4));
  CHECK_THROWS_AS(bosonic_apply(0, p1, a), Error);
}

TEST_CASE("adjoint swaps F and G") {
  for (const auto& rep : {fermionic_rep(), macdonald_rep()}) {
    const auto adj = adjoint(rep);
    for (const auto& s : basis_up_to(*rep, 4)) {
      for (const auto& t : basis_up_to(*rep, 2)) {
        CHECK(compute_F(*adj, s, t) == compute_G(*rep, s, t));
        CHECK(compute_G(*adj, s, t) == compute_F(*rep, s, t));
      }
    }
    check_relations(*adj, 2, 3);
  }
}

TEST_CASE("state vectors") {
  StateVec x = v("[1]") + v("[2]");
  x -= v("[1]");
  CHECK(x == v("[2]"));
  CHECK((Scalar(0) * x).is_zero());
  CHECK(x.coeff(I("[1]")).is_zero());
  const auto& F = *fermionic_rep();
  CHECK((v("[2]") - v("[1,1]")).to_string(F) == "v[2] - v[1,1]");
  CHECK((S("(1-t)/(1-q)") * v("[1]")).to_string(F) == "(t - 1)/(q - 1)*v[1]");
  CHECK(StateVec().to_string(F) == "0");
}
