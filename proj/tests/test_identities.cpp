#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "fockbridge/identities.hpp"
#include "fockbridge/reps.hpp"
#include "support.hpp"

using namespace fbtest;

namespace {

// Wraps a representation and corrupts one matrix entry of U_k or D_k, or
// flips the sign of / drops one term of B_k.
class CorruptedRep final : public Rep {
 public:
  enum class Kind { set_entry, flip_sign, drop_term };

  CorruptedRep(RepPtr inner, char op, int k, BasisIndex from, BasisIndex to, Kind kind, Scalar value = Scalar())
      : inner_(std::move(inner)), op_(op), k_(k), from_(std::move(from)), to_(std::move(to)), kind_(kind),
        value_(std::move(value)) {}

  std::string name() const override { return "corrupted(" + inner_->name() + ")"; }
  const HeisenbergParams& params() const override { return inner_->params(); }
  int degree_step() const override { return inner_->degree_step(); }
  int degree(const BasisIndex& idx) const override { return inner_->degree(idx); }
  std::vector<BasisIndex> basis_of_degree(int d) const override { return inner_->basis_of_degree(d); }
  BasisIndex highest() const override { return inner_->highest(); }
  bool provides_B() const override { return op_ == 'B'; }
  bool provides_UD() const override { return op_ != 'B'; }
  StateVec raw_B(int k, const BasisIndex& idx) const override { return patch('B', k, idx, apply_B(*inner_, k, idx)); }
  StateVec raw_U(int k, const BasisIndex& idx) const override { return patch('U', k, idx, apply_U(*inner_, k, idx)); }
  StateVec raw_D(int k, const BasisIndex& idx) const override { return patch('D', k, idx, apply_D(*inner_, k, idx)); }
  std::string label(const BasisIndex& idx) const override { return inner_->label(idx); }
  BasisIndex parse_index(std::string_view text) const override { return inner_->parse_index(text); }

 private:
  StateVec patch(char op, int k, const BasisIndex& idx, StateVec v) const {
    if (op != op_ || k != k_ || idx != from_) return v;
    const Scalar old = v.coeff(to_);
    switch (kind_) {
      case Kind::set_entry: v.add_term(to_, value_ - old); break;
      case Kind::flip_sign: v.add_term(to_, Scalar(-2) * old); break;
      case Kind::drop_term: v.add_term(to_, -old); break;
    }
    return v;
  }

  RepPtr inner_;
  char op_;
  int k_;
  BasisIndex from_, to_;
  Kind kind_;
  Scalar value_;
};

RepPtr corrupt(RepPtr inner, char op, int k, const std::string& from, const std::string& to, CorruptedRep::Kind kind,
               Scalar value = Scalar()) {
  return std::make_shared<CorruptedRep>(std::move(inner), op, k, I(from), I(to), kind, std::move(value));
}

}  // namespace

TEST_CASE("theorem suite on the fermionic representation") {
  const auto& F = *fermionic_rep();
  CHECK(verify_heisenberg(F, 3, 5).passed());
  CHECK(verify_pieri(F, 3, 5).passed());
  CHECK(verify_du(F, 3, 5).passed());
  CHECK(verify_bf(F, 5, {-3, -2, -1, 1, 2, 3}).passed());
  CHECK(verify_cauchy(F, 1, 1, 2, I("[]"), I("[]")).passed());
  CHECK(verify_cauchy(F, 3, 3, 4, I("[]"), I("[]")).passed());
  CHECK(verify_cauchy(F, 2, 2, 3, I("[1]"), I("[]")).passed());
  CHECK(verify_cauchy(F, 2, 2, 3, I("[2]"), I("[1,1]")).passed());
}

TEST_CASE("theorem suite on the macdonald representation") {
  const auto& M = *macdonald_rep();
  CHECK(verify_pieri(M, 2, 3).passed());
  CHECK(verify_du(M, 2, 3).passed());
  CHECK(verify_bf(M, 4, {-2, -1, 1, 2}).passed());
  CHECK(verify_cauchy(M, 2, 2, 3, I("[]"), I("[]")).passed());
  CHECK(verify_cauchy(M, 2, 2, 2, I("[1]"), I("[]")).passed());
}

TEST_CASE("theorem suite on composite representations") {
  const auto F = fermionic_rep();
  for (const auto& rep : {tensor(F, F), direct_sum(F, F), llt_q1_rep(2), adjoint(macdonald_rep())}) {
    CHECK_MESSAGE(verify_pieri(*rep, 2, 3).passed(), rep->name());
    CHECK_MESSAGE(verify_du(*rep, 2, 3).passed(), rep->name());
    CHECK_MESSAGE(verify_bf(*rep, 3, {-2, -1, 1, 2}).passed(), rep->name());
    CHECK_MESSAGE(verify_cauchy(*rep, 2, 2, 2, rep->highest(), rep->highest()).passed(), rep->name());
  }
}

TEST_CASE("small instances") {
  const auto& F = *fermionic_rep();
  CHECK(verify_pieri(F, 3, 0).passed());
  CHECK(verify_pieri(F, 1, 1).checked().size() == 8);
  CHECK(verify_du(F, 1, 0).passed());
  CHECK(verify_bf(F, 0, {-1}).passed());
  CHECK(verify_bf(F, 2, {5}).passed());
}

TEST_CASE("Cauchy is symmetric for the self-adjoint fermionic representation") {
  const auto& F = *fermionic_rep();
  for (const auto& [t, r] : std::vector<std::pair<std::string, std::string>>{{"[1]", "[]"}, {"[2]", "[1]"}}) {
    CHECK(verify_cauchy(F, 2, 3, 3, I(t), I(r)).passed() == verify_cauchy(F, 3, 2, 3, I(r), I(t)).passed());
    CHECK(verify_cauchy(F, 3, 2, 3, I(r), I(t)).passed());
  }
}

TEST_CASE("wrong parameters are detected by every verifier") {
  const auto& F = *fermionic_rep();
  const auto two = HeisenbergParams::constant(2);
  CHECK_FALSE(verify_heisenberg(F, two, 2, 2).passed());
  CHECK_FALSE(verify_pieri(F, two, 2, 2).passed());
  CHECK_FALSE(verify_du(F, two, 2, 2).passed());
  CHECK_FALSE(verify_bf(F, two, 2, {-1, 1}).passed());
  CHECK_FALSE(verify_cauchy(F, two, 2, 2, 2, I("[]"), I("[]")).passed());
}

TEST_CASE("seeded corruptions are detected") {
  using K = CorruptedRep::Kind;
  const auto F = fermionic_rep();
  const auto M = macdonald_rep();
  // flipped sign in B_{-2}
  const auto flipped = corrupt(F, 'B', -2, "[1]", "[3]", K::flip_sign);
  CHECK_FALSE(verify_heisenberg(*flipped, 2, 2).passed());
  CHECK_FALSE(verify_bf(*flipped, 2, {-2}).passed());
  // dropped term in U_1
  const auto dropped = corrupt(M, 'U', 1, "[1]", "[1,1]", K::drop_term);
  CHECK_FALSE(verify_pieri(*dropped, 1, 2).passed());
  CHECK_FALSE(verify_du(*dropped, 1, 2).passed());
  CHECK_FALSE(verify_cauchy(*dropped, 2, 2, 2, I("[]"), I("[]")).passed());
  // extra entry in D_1
  const auto extra = corrupt(F, 'D', 1, "[2]", "[1]", K::set_entry, Scalar(3));
  CHECK_FALSE(verify_du(*extra, 1, 2).passed());
  CHECK_FALSE(verify_pieri(*extra, 1, 2).passed());
}

TEST_CASE("reports serialize") {
  const auto& F = *fermionic_rep();
  const auto ok = verify_du(F, 1, 1);
  const auto j = ok.to_json();
  CHECK(j["identity"] == "du");
  CHECK(j["passed"] == true);
  CHECK(j["checked"] == 2);
  CHECK(j["failures"].empty());
  CHECK(ok.to_text() == "du: PASS (2 instances)\n");
  const auto bad = verify_du(F, HeisenbergParams::constant(2), 1, 1);
  CHECK(bad.to_json()["failures"].size() == 2);
  CHECK(bad.to_json()["failures"][0]["instance"] == "a=1 b=1 v=[]");
  CHECK(bad.to_text().find("FAIL (2 of 2 instances)") != std::string::npos);
}

TEST_CASE("converse diagnostic on genuine bundles") {
  const auto B = bundle_from_json(export_bundle(*fermionic_rep(), 7, 7));
  const auto report = diagnose_converse(*B, HeisenbergParams::unit(), 3, 2);
  CHECK(report.independent());
  CHECK(report.condition1());
  CHECK(report.condition2());
  CHECK(report.condition3());
  CHECK(report.passed());
  CHECK(report.to_json()["conditions"]["pieri"] == true);
  CHECK_THROWS_AS(diagnose_converse(*B, HeisenbergParams::unit(), 3, 3), Error);
}

TEST_CASE("converse diagnostic on corrupted bundles") {
  auto doc = export_bundle(*fermionic_rep(), 7, 7);
  // <U_1 v_(1,1), v_(3)> = 1: an entry off the horizontal strips.
  auto perturbed = doc;
  for (auto& op : perturbed["operators"])
    if (op["op"] == "U" && op["k"] == 1 && op["from_degree"] == 2) op["matrix"][0][1] = "1";
  const auto r1 = diagnose_converse(*bundle_from_json(perturbed), HeisenbergParams::unit(), 3, 2);
  CHECK_FALSE(r1.du.passed());
  CHECK_FALSE(r1.condition2());
  CHECK_FALSE(r1.condition3());
  CHECK(r1.equivalent());
  CHECK_FALSE(r1.passed());

  const auto r2 = diagnose_converse(*bundle_from_json(doc), HeisenbergParams::constant(2), 3, 2);
  CHECK_FALSE(r2.du.passed());
  CHECK_FALSE(r2.condition1());

  // <D_2 v_(2), v_()> = 2 breaks [D_1, D_2].
  auto broken = doc;
  for (auto& op : broken["operators"])
    if (op["op"] == "D" && op["k"] == 2 && op["from_degree"] == 2) op["matrix"][0][0] = "2";
  const auto r3 = diagnose_converse(*bundle_from_json(broken), HeisenbergParams::unit(), 3, 2);
  CHECK_FALSE(r3.commute_D.passed());
  CHECK_FALSE(r3.condition1());
  CHECK(r3.equivalent());
}

TEST_CASE("converse diagnostic on a macdonald bundle with the wrong parameters") {
  const auto B = bundle_from_json(export_bundle(*macdonald_rep(), 4, 4));
  const auto genuine = diagnose_converse(*B, HeisenbergParams::macdonald(), 2, 1);
  CHECK(genuine.passed());
  const auto wrong = diagnose_converse(*B, HeisenbergParams::unit(), 2, 1);
  CHECK_FALSE(wrong.du.passed());
  CHECK_FALSE(wrong.passed());
}
