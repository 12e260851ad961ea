// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "fockbridge/identities.hpp"
#include "fockbridge/reps.hpp"
#include "oracles.hpp"

using namespace fockbridge;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (passed) detail = what;
    passed = false;
  }
  void require(const VerifyReport& r, const std::string& where) {
    std::string first;
    if (!r.failures().empty()) first = ": " + r.failures().front().instance;
    require(r.passed(), r.identity() + " on " + where + first);
  }
};

BasisIndex idx(const Partition& p) { return partition_index(p); }

std::vector<BasisIndex> basis_up_to(const Rep& rep, int d) {
  std::vector<BasisIndex> out;
  for (int e = rep.min_degree(); e <= d; ++e)
    for (const auto& b : rep.basis_of_degree(e)) out.push_back(b);
  return out;
}

Bindings bind(const std::string& text) {
  Bindings b;
  b.assign(text);
  return b;
}

Outcome boson_fermion() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto& F = *fermionic_rep();
  int count = 0;
  for (int d = 0; d <= 6; ++d)
    for (const auto& lambda : partitions_of(d)) {
      const SymFunc image = convert(phi_map(F, StateVec::basis(idx(lambda))), Basis::m);
      o.require(image == schur_tableaux(SkewShape(lambda, Partition())), "Phi(v" + lambda.to_string() + ") != s");
      ++count;
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 10.0, "took " + std::to_string(secs) + "s, budget 10s");
  o.detail = o.passed ? std::to_string(count) + " partitions of size <= 6" : o.detail;
  return o;
}

Outcome heisenberg_relations() {
  Outcome o;
  const auto f = verify_heisenberg(*fermionic_rep(), 4, 6);
  const auto m = verify_heisenberg(*macdonald_rep(), 4, 5);
  o.require(f, "fermionic");
  o.require(m, "macdonald");
  if (o.passed)
    o.detail = std::to_string(f.checked().size()) + " fermionic and " + std::to_string(m.checked().size()) +
               " macdonald commutators";
  return o;
}

Outcome pieri() {
  Outcome o;
  const auto f = verify_pieri(*fermionic_rep(), 3, 5);
  const auto m = verify_pieri(*macdonald_rep(), 2, 4);
  o.require(f, "fermionic");
  o.require(m, "macdonald");
  if (o.passed) o.detail = std::to_string(f.checked().size() + m.checked().size()) + " instances";
  return o;
}

Outcome du_lemma() {
  Outcome o;
  const auto f = verify_du(*fermionic_rep(), 3, 5);
  const auto m = verify_du(*macdonald_rep(), 3, 5);
  o.require(f, "fermionic");
  o.require(m, "macdonald");
  if (o.passed) o.detail = std::to_string(f.checked().size() + m.checked().size()) + " instances";
  return o;
}

Outcome cauchy() {
  Outcome o;
  const auto F = fermionic_rep();
  const auto M = macdonald_rep();
  const BasisIndex empty = idx(Partition()), one = idx(Partition{1});
  o.require(verify_cauchy(*F, 3, 3, 4, empty, empty), "fermionic 3+3 to degree 4");
  o.require(verify_cauchy(*M, 2, 2, 3, empty, empty), "macdonald 2+2 to degree 3");
  o.require(verify_cauchy(*F, 3, 3, 4, one, empty), "fermionic t=(1) r=()");
  o.require(verify_cauchy(*M, 2, 2, 3, one, empty), "macdonald t=(1) r=()");
  if (o.passed) o.detail = "plain and skew t=(1), r=() on both";
  return o;
}

Outcome macdonald_cross_check() {
  Outcome o;
  const auto& M = *macdonald_rep();
  const Bindings q_is_t = bind("q=t"), q_is_0 = bind("q=0");
  for (int d = 0; d <= 4; ++d) {
    const auto oracle = fbtest::gram_schmidt_P(d);
    for (const auto& lambda : partitions_of(d)) {
      const std::string at = lambda.to_string();
      const SymFunc g = convert(compute_G(M, idx(lambda), idx(Partition())), Basis::m);
      o.require(g == oracle.at(lambda), "G" + at + " differs from Gram-Schmidt P");
      o.require(convert(g.specialized(q_is_t), Basis::s) == SymFunc::element(Basis::s, lambda),
                "G" + at + " at q=t is not s" + at);
      const SymFunc hl = g.specialized(q_is_0);
      o.require(hl.coeff(lambda).is_one(), "HL P" + at + " leading coefficient");
      for (const auto& [mu, c] : hl.terms())
        o.require(dominates(lambda, mu), "HL P" + at + " has m" + mu.to_string() + " outside the dominance order");
    }
  }
  if (o.passed) o.detail = "|lambda| <= 4: Gram-Schmidt, q=t, q=0";
  return o;
}

Outcome tensor_and_sum() {
  Outcome o;
  const auto F = fermionic_rep();
  const auto T = tensor(F, F);
  const auto S = direct_sum(F, F);
  int count = 0;
  for (int d = 0; d <= 4; ++d)
    for (const auto& s : T->basis_of_degree(d))
      for (const auto& t : basis_up_to(*T, d)) {
        const std::string sl = T->label(s), tl = T->label(t);
        const auto sb = sl.find('|'), tb = tl.find('|');
        const SymFunc expected =
            multiply(compute_F(*F, F->parse_index(sl.substr(0, sb)), F->parse_index(tl.substr(0, tb))),
                     compute_F(*F, F->parse_index(sl.substr(sb + 1)), F->parse_index(tl.substr(tb + 1))));
        o.require(compute_F(*T, s, t) == expected, "F_{" + sl + "/" + tl + "} does not factor");
        ++count;
      }
  for (int d = 0; d <= 4; ++d)
    for (const auto& lambda : partitions_of(d))
      for (const auto& mu : basis_up_to(*F, d)) {
        const std::string l = lambda.to_string(), m = F->label(mu);
        const SymFunc inside = compute_F(*F, idx(lambda), mu);
        for (int i : {0, 1}) {
          const std::string si = std::to_string(i), sj = std::to_string(1 - i);
          o.require(compute_F(*S, S->parse_index(si + ":" + l), S->parse_index(si + ":" + m)) == inside,
                    "summand " + si + " F_{" + l + "/" + m + "}");
          o.require(compute_F(*S, S->parse_index(si + ":" + l), S->parse_index(sj + ":" + m)).is_zero(),
                    "cross-summand F_{" + l + "/" + m + "} nonzero");
          count += 2;
        }
      }
  if (o.passed) o.detail = std::to_string(count) + " instances to degree 4";
  return o;
}

Outcome llt_q1() {
  Outcome o;
  const auto L = llt_q1_rep(2);
  int products = 0, sizes = 0;
  for (int d = 0; d <= 8; ++d)
    for (const auto& lambda : partitions_of(d)) {
      const auto cq = core_quotient(lambda, 2);
      if (!cq.core.empty()) continue;
      const SymFunc expected = multiply(convert(SymFunc::element(Basis::s, cq.quotient[0]), Basis::p),
                                        convert(SymFunc::element(Basis::s, cq.quotient[1]), Basis::p));
      o.require(compute_F(*L, idx(lambda), idx(Partition())) == expected,
                "F" + lambda.to_string() + " is not the product over its 2-quotient");
      ++products;
    }
  for (int n : {2, 3})
    for (int d = 0; d <= 10; ++d)
      for (const auto& lambda : partitions_of(d)) {
        const auto cq = core_quotient(lambda, n);
        int total = cq.core.size();
        for (const auto& part : cq.quotient) total += n * part.size();
        o.require(total == lambda.size(), "size identity for " + lambda.to_string());
        o.require(from_core_quotient(cq, n) == lambda, "core/quotient does not invert for " + lambda.to_string());
        ++sizes;
      }
  if (o.passed)
    o.detail = std::to_string(products) + " products (n=2), " + std::to_string(sizes) + " size identities";
  return o;
}

Outcome ribbon_positivity() {
  Outcome o;
  for (int n : {2, 3}) {
    const auto a = HeisenbergParams::ribbon(n);
    for (int k = 1; k <= 4; ++k) {
      const Scalar h = kappa_eval(complete_h(k), a);
      const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + h.to_string();
      o.require(h.is_polynomial() && h.num().deg_t() <= 0, at + " is not a polynomial in q");
      for (const auto& term : h.num().terms()) o.require(term.coeff >= 0, at + " has a negative coefficient");
    }
  }
  const Scalar sample = kappa_eval(complete_h(2), HeisenbergParams::ribbon(2));
  o.require(sample == Scalar::parse("1 + q^2 + q^4"), "n=2 k=2 gives " + sample.to_string());
  if (o.passed) o.detail = "n in {2,3}, k <= 4; n=2 k=2 gives " + sample.to_string();
  return o;
}

Outcome converse() {
  Outcome o;
  const int d_max = 3, k_max = 2;
  const auto doc = export_bundle(*fermionic_rep(), d_max + 2 * k_max, d_max + 2 * k_max);
  const auto unit = HeisenbergParams::unit();
  auto conditions = [](const ConverseReport& r) {
    return std::string(r.condition1() ? "1" : "-") + (r.condition2() ? "2" : "-") + (r.condition3() ? "3" : "-");
  };

  const auto genuine = diagnose_converse(*bundle_from_json(doc), unit, d_max, k_max);
  o.require(genuine.independent(), "genuine bundle: G' not independent");
  o.require(genuine.condition1() && genuine.condition2() && genuine.condition3(),
            "genuine bundle holds only " + conditions(genuine));

  auto edit = [&](const std::string& op, int k, int from, int row, int col, const std::string& value) {
    auto copy = doc;
    for (auto& m : copy["operators"])
      if (m["op"] == op && m["k"] == k && m["from_degree"] == from) m["matrix"][row][col] = value;
    return bundle_from_json(copy);
  };

  // <U_1 v_(1,1), v_(3)> = 1 lies off every horizontal strip.
  const auto perturbed = diagnose_converse(*edit("U", 1, 2, 0, 1, "1"), unit, d_max, k_max);
  o.require(!perturbed.condition2(), "perturbed U entry not caught by Pieri (" + conditions(perturbed) + ")");

  const auto wrong_a = diagnose_converse(*bundle_from_json(doc), HeisenbergParams::constant(2), d_max, k_max);
  o.require(!wrong_a.condition1(), "wrong a_k not caught by the Heisenberg relations (" + conditions(wrong_a) + ")");

  // <D_2 v_(2), v_()> = 2 breaks [D_1, D_2] = 0.
  const auto broken = diagnose_converse(*edit("D", 2, 2, 0, 0, "2"), unit, d_max, k_max);
  o.require(!broken.commute_D.passed(), "broken D commutation not reported");
  o.require(!broken.condition1(), "broken D commutation not caught by the Heisenberg relations");

  if (o.passed)
    o.detail = "genuine " + conditions(genuine) + "; perturbed U " + conditions(perturbed) + "; wrong a_k " +
               conditions(wrong_a) + "; broken D " + conditions(broken);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"boson-fermion", boson_fermion},
      {"heisenberg relations", heisenberg_relations},
      {"generalized pieri", pieri},
      {"du lemma", du_lemma},
      {"generalized cauchy", cauchy},
      {"macdonald cross-validation", macdonald_cross_check},
      {"tensor and direct sum", tensor_and_sum},
      {"llt q=1", llt_q1},
      {"ribbon positivity", ribbon_positivity},
      {"converse diagnostic", converse},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "  [" << timing
              << "]  " << o.detail << std::endl;
    failed += o.passed ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
