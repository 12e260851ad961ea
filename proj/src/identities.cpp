#include "fockbridge/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "fockbridge/linalg.hpp"

namespace fockbridge {

void VerifyReport::error(const std::string& instance, const std::string& what) {
  checked_.emplace_back(identity_, instance);
  failures_.push_back({instance, "error: " + what, ""});
}

void VerifyReport::merge(const VerifyReport& other) {
  checked_.insert(checked_.end(), other.checked_.begin(), other.checked_.end());
  failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : failures_) failures.push_back({{"instance", f.instance}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"identity", identity_}, {"passed", passed()}, {"checked", checked_.size()}, {"failures", failures}};
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  if (passed()) {
    out << identity_ << ": PASS (" << checked_.size() << " instances)\n";
  } else {
    out << identity_ << ": FAIL (" << failures_.size() << " of " << checked_.size() << " instances)\n";
    for (const auto& f : failures_) {
      out << "  " << f.instance << "\n    lhs: " << f.lhs << "\n";
      if (!f.rhs.empty()) out << "    rhs: " << f.rhs << "\n";
    }
  }
  return out.str();
}

namespace {

std::vector<BasisIndex> basis_up_to(const Rep& rep, int d_max) {
  std::vector<BasisIndex> out;
  for (int d = rep.min_degree(); d <= d_max; ++d)
    for (const auto& b : rep.basis_of_degree(d)) out.push_back(b);
  return out;
}

std::vector<BasisIndex> basis_at(const Rep& rep, long d) {
  if (d < rep.min_degree()) return {};
  return rep.basis_of_degree(static_cast<int>(d));
}

// Runs one instance, turning computation errors into recorded failures.
void guarded(VerifyReport& report, const std::string& instance, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    report.error(instance, e.what());
  }
}

Scalar h_bracket(int j, const HeisenbergParams& a) { return kappa_eval(complete_h(j), a); }

// Memoized F_{s/b} or G_{s/b}.
class GeneratingFunctions {
 public:
  explicit GeneratingFunctions(const Rep& rep) : rep_(rep), b_(rep.highest()) {}

  const SymFunc& F(const BasisIndex& s) { return get(f_, s, compute_F); }
  const SymFunc& G(const BasisIndex& s) { return get(g_, s, compute_G); }

 private:
  template <typename Fn>
  const SymFunc& get(std::map<BasisIndex, SymFunc>& memo, const BasisIndex& s, Fn fn) {
    auto it = memo.find(s);
    if (it == memo.end()) it = memo.emplace(s, fn(rep_, s, b_)).first;
    return it->second;
  }

  const Rep& rep_;
  BasisIndex b_;
  std::map<BasisIndex, SymFunc> f_, g_;
};

std::vector<std::string> variables(const char* prefix, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

VerifyReport verify_heisenberg(const Rep& rep, const HeisenbergParams& a, int k_max, int d_max) {
  VerifyReport report("heisenberg");
  for (const auto& b : basis_up_to(rep, d_max)) {
    const StateVec x = StateVec::basis(b);
    const std::string at = " on v" + rep.label(b);
    for (int k = 1; k <= k_max; ++k) {
      for (int l = 1; l <= k_max; ++l) {
        const std::string mixed = "[B_" + std::to_string(k) + ", B_-" + std::to_string(l) + "]" + at;
        guarded(report, mixed, [&] {
          const StateVec lhs = apply_B(rep, k, apply_B(rep, -l, x)) - apply_B(rep, -l, apply_B(rep, k, x));
          const StateVec rhs = k == l ? (Scalar(k) * a.a(k)) * x : StateVec();
          report.check_states(rep, mixed, lhs, rhs);
        });
        if (k >= l) continue;
        for (int sign : {1, -1}) {
          const std::string same = "[B_" + std::to_string(sign * k) + ", B_" + std::to_string(sign * l) + "]" + at;
          guarded(report, same, [&] {
            const StateVec lhs = apply_B(rep, sign * k, apply_B(rep, sign * l, x));
            const StateVec rhs = apply_B(rep, sign * l, apply_B(rep, sign * k, x));
            report.check_states(rep, same, lhs, rhs);
          });
        }
      }
    }
  }
  return report;
}

VerifyReport verify_heisenberg(const Rep& rep, int k_max, int d_max) {
  return verify_heisenberg(rep, rep.params(), k_max, d_max);
}

VerifyReport verify_pieri(const Rep& rep, const HeisenbergParams& a, int k_max, int d_max) {
  VerifyReport report("genPieri");
  GeneratingFunctions gf(rep);
  const int m = rep.degree_step();
  for (int k = 1; k <= k_max; ++k) {
    const SymFunc hk = complete_h(k);
    const SymFunc hka = theta_apply(hk, a);
    for (const auto& s : basis_up_to(rep, d_max)) {
      const std::string tag = "k=" + std::to_string(k) + " s=" + rep.label(s);
      const long up = rep.degree(s) + static_cast<long>(m) * k;
      const long down = rep.degree(s) - static_cast<long>(m) * k;

      guarded(report, tag + ": h_k[a] G_s", [&] {
        SymFunc rhs(Basis::p);
        for (const auto& [t, c] : apply_U(rep, k, s).terms()) rhs += c * gf.G(t);
        report.check(tag + ": h_k[a] G_s", multiply(hka, gf.G(s)), rhs);
      });
      guarded(report, tag + ": h_k[a] F_s", [&] {
        SymFunc rhs(Basis::p);
        for (const auto& t : basis_at(rep, up)) {
          const Scalar c = apply_D(rep, k, t).coeff(s);
          if (!c.is_zero()) rhs += c * gf.F(t);
        }
        report.check(tag + ": h_k[a] F_s", multiply(hka, gf.F(s)), rhs);
      });
      guarded(report, tag + ": h_k^perp G_s", [&] {
        SymFunc rhs(Basis::p);
        for (const auto& [t, c] : apply_D(rep, k, s).terms()) rhs += c * gf.G(t);
        report.check(tag + ": h_k^perp G_s", perp_apply(hk, gf.G(s)), rhs);
      });
      guarded(report, tag + ": h_k^perp F_s", [&] {
        SymFunc rhs(Basis::p);
        for (const auto& t : basis_at(rep, down)) {
          const Scalar c = apply_U(rep, k, t).coeff(s);
          if (!c.is_zero()) rhs += c * gf.F(t);
        }
        report.check(tag + ": h_k^perp F_s", perp_apply(hk, gf.F(s)), rhs);
      });
    }
  }
  return report;
}

VerifyReport verify_pieri(const Rep& rep, int k_max, int d_max) { return verify_pieri(rep, rep.params(), k_max, d_max); }

VerifyReport verify_du(const Rep& rep, const HeisenbergParams& a, int ab_max, int d_max) {
  VerifyReport report("du");
  for (const auto& v : basis_up_to(rep, d_max)) {
    const StateVec x = StateVec::basis(v);
    for (int ai = 1; ai <= ab_max; ++ai) {
      for (int bi = 1; bi <= ab_max; ++bi) {
        const std::string tag = "a=" + std::to_string(ai) + " b=" + std::to_string(bi) + " v=" + rep.label(v);
        guarded(report, tag, [&] {
          const StateVec lhs = apply_D(rep, bi, apply_U(rep, ai, x));
          StateVec rhs;
          for (int j = 0; j <= std::min(ai, bi); ++j)
            rhs.axpy(h_bracket(j, a), apply_U(rep, ai - j, apply_D(rep, bi - j, x)));
          report.check_states(rep, tag, lhs, rhs);
        });
      }
    }
  }
  return report;
}

VerifyReport verify_du(const Rep& rep, int ab_max, int d_max) { return verify_du(rep, rep.params(), ab_max, d_max); }

VerifyReport verify_cauchy(const Rep& rep, const HeisenbergParams& a, int x_count, int y_count, int d_max,
                           const BasisIndex& t, const BasisIndex& r) {
  VerifyReport report("genCauchy");
  const std::string tag = "x=" + std::to_string(x_count) + " y=" + std::to_string(y_count) +
                          " d<=" + std::to_string(d_max) + " t=" + rep.label(t) + " r=" + rep.label(r);
  guarded(report, tag, [&] {
    const auto xs = variables("x", x_count), ys = variables("y", y_count);
    std::vector<std::string> all = xs;
    all.insert(all.end(), ys.begin(), ys.end());
    auto keep = [&](const MultiPoly::Exponents& e) {
      int dx = 0, dy = 0;
      for (int i = 0; i < x_count; ++i) dx += e[i];
      for (int i = 0; i < y_count; ++i) dy += e[x_count + i];
      return dx <= d_max && dy <= d_max;
    };
    const int m = rep.degree_step();
    const long deg_t = rep.degree(t), deg_r = rep.degree(r);

    MultiPoly lhs(all);
    const long top = std::min(deg_t, deg_r) + static_cast<long>(m) * d_max;
    for (long d = std::max<long>(std::max(deg_t, deg_r), rep.min_degree()); d <= top; ++d) {
      for (const auto& s : basis_at(rep, d)) {
        const SymFunc f = compute_F(rep, s, t), g = compute_G(rep, s, r);
        if (f.is_zero() || g.is_zero()) continue;
        lhs = lhs + (evaluate_vars(f, xs) * evaluate_vars(g, ys)).over(all);
      }
    }

    MultiPoly sum(all);
    const long bottom = std::max<long>(std::max(deg_t, deg_r) - static_cast<long>(m) * d_max, rep.min_degree());
    for (long d = bottom; d <= std::min(deg_t, deg_r); ++d) {
      for (const auto& s : basis_at(rep, d)) {
        const SymFunc f = compute_F(rep, r, s), g = compute_G(rep, t, s);
        if (f.is_zero() || g.is_zero()) continue;
        sum = sum + (evaluate_vars(f, xs) * evaluate_vars(g, ys)).over(all);
      }
    }

    std::vector<Scalar> h;
    for (int i = 0; i <= d_max; ++i) h.push_back(h_bracket(i, a));
    MultiPoly rhs = sum.truncated(keep);
    for (int j = 0; j < x_count; ++j) {
      for (int k = 0; k < y_count; ++k) {
        MultiPoly factor(all);
        for (int i = 0; i <= d_max; ++i) {
          MultiPoly::Exponents e(all.size(), 0);
          e[j] = i;
          e[x_count + k] = i;
          factor.add_term(e, h[i]);
        }
        rhs = (rhs * factor).truncated(keep);
      }
    }
    report.check(tag, lhs.truncated(keep), rhs);
  });
  return report;
}

VerifyReport verify_cauchy(const Rep& rep, int x_count, int y_count, int d_max, const BasisIndex& t,
                           const BasisIndex& r) {
  return verify_cauchy(rep, rep.params(), x_count, y_count, d_max, t, r);
}

VerifyReport verify_bf(const Rep& rep, const HeisenbergParams& a, int d_max, const std::vector<int>& l_set) {
  VerifyReport report("BF");
  for (const auto& s : basis_up_to(rep, d_max)) {
    for (int l : l_set) {
      const std::string tag = "l=" + std::to_string(l) + " s=" + rep.label(s);
      guarded(report, tag, [&] {
        const SymFunc lhs = phi_map(rep, apply_B(rep, l, s));
        const SymFunc rhs = bosonic_apply(l, phi_map(rep, StateVec::basis(s)), a);
        report.check(tag, lhs, rhs);
      });
    }
  }
  return report;
}

VerifyReport verify_bf(const Rep& rep, int d_max, const std::vector<int>& l_set) {
  return verify_bf(rep, rep.params(), d_max, l_set);
}

// ---------------------------------------------------------------------------
// Converse diagnostic

bool ConverseReport::independent() const {
  for (const auto& d : independence)
    if (!d.independent()) return false;
  return true;
}

bool ConverseReport::passed() const {
  return independent() && condition1() && condition2() && condition3() && commute_U.passed() && commute_D.passed() &&
         du.passed();
}

nlohmann::json ConverseReport::to_json() const {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& d : independence)
    degrees.push_back(
        {{"degree", d.degree}, {"dimension", d.dimension}, {"rank", d.rank}, {"independent", d.independent()}});
  return {{"identity", "converse"},
          {"passed", passed()},
          {"independent", independent()},
          {"independence", degrees},
          {"conditions",
           {{"heisenberg_action", condition1()}, {"pieri", condition2()}, {"cauchy", condition3()}}},
          {"equivalent", equivalent()},
          {"reports",
           {heisenberg.to_json(), commute_U.to_json(), commute_D.to_json(), du.to_json(), pieri.to_json(),
            cauchy.to_json()}}};
}

std::string ConverseReport::to_text() const {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "holds" : "fails"; };
  out << "converse: " << (passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& d : independence)
    out << "  degree " << d.degree << ": " << d.dimension << " generating functions, rank " << d.rank
        << (d.independent() ? "" : " (dependent)") << "\n";
  out << "  (1) Heisenberg action: " << yes(condition1()) << "\n";
  out << "  (2) Pieri identities:  " << yes(condition2()) << "\n";
  out << "  (3) Cauchy identity:   " << yes(condition3()) << "\n";
  out << "  conditions " << (equivalent() ? "agree" : "disagree") << " on this truncation\n";
  for (const auto* r : {&heisenberg, &commute_U, &commute_D, &du, &pieri, &cauchy}) out << r->to_text();
  return out.str();
}

ConverseReport diagnose_converse(const Rep& rep, const HeisenbergParams& a, int d_max, int k_max) {
  const long needed = d_max + 2L * rep.degree_step() * k_max;
  try {
    rep.basis_of_degree(static_cast<int>(needed));
  } catch (const Error& e) {
    throw Error("converse diagnostic at d_max=" + std::to_string(d_max) + ", k_max=" + std::to_string(k_max) +
                " needs degree " + std::to_string(needed) + ": " + e.what());
  }

  ConverseReport out;
  for (int d = rep.min_degree(); d <= d_max; ++d) {
    const auto basis = rep.basis_of_degree(d);
    if (basis.empty()) continue;
    const auto e = skew_degree(rep, basis.front(), rep.highest());
    ScalarMatrix rows;
    const auto parts = e ? partitions_of(*e) : std::vector<Partition>{};
    for (const auto& s : basis) {
      const SymFunc g = compute_G(rep, s, rep.highest());
      std::vector<Scalar> row;
      for (const auto& lambda : parts) row.push_back(g.coeff(lambda));
      rows.push_back(std::move(row));
    }
    const int r = parts.empty() ? 0 : static_cast<int>(rank(rows));
    out.independence.push_back({d, static_cast<int>(basis.size()), r});
  }

  for (const auto& v : basis_up_to(rep, d_max)) {
    const StateVec x = StateVec::basis(v);
    for (int k = 1; k <= k_max; ++k) {
      for (int l = k + 1; l <= k_max; ++l) {
        const std::string tag = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " v=" + rep.label(v);
        guarded(out.commute_U, tag, [&] {
          out.commute_U.check_states(rep, tag, apply_U(rep, k, apply_U(rep, l, x)), apply_U(rep, l, apply_U(rep, k, x)));
        });
        guarded(out.commute_D, tag, [&] {
          out.commute_D.check_states(rep, tag, apply_D(rep, k, apply_D(rep, l, x)), apply_D(rep, l, apply_D(rep, k, x)));
        });
      }
    }
  }
  out.heisenberg = verify_heisenberg(rep, a, k_max, d_max);
  out.du = verify_du(rep, a, k_max, d_max);
  out.pieri = verify_pieri(rep, a, k_max, d_max);
  out.cauchy = verify_cauchy(rep, a, std::max(d_max, 1), std::max(d_max, 1), d_max, rep.highest(), rep.highest());
  return out;
}

}  // namespace fockbridge
