#include "fockbridge/heisenberg.hpp"

#include <mutex>

namespace fockbridge {

BasisIndex partition_index(const Partition& lambda) { return BasisIndex{lambda.parts()}; }

Partition index_partition(const BasisIndex& idx) { return Partition(idx.code); }

// ---------------------------------------------------------------------------
// StateVec

StateVec StateVec::basis(const BasisIndex& idx, const Scalar& c) {
  StateVec v;
  v.add_term(idx, c);
  return v;
}

Scalar StateVec::coeff(const BasisIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Scalar() : it->second;
}

void StateVec::add_term(const BasisIndex& idx, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(idx, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void StateVec::axpy(const Scalar& c, const StateVec& v) {
  if (c.is_zero()) return;
  for (const auto& [idx, x] : v.terms_) add_term(idx, c.is_one() ? x : c * x);
}

StateVec operator*(const Scalar& c, const StateVec& v) {
  StateVec out;
  out.axpy(c, v);
  return out;
}

std::string StateVec::to_string(const Rep& rep) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& idx = it->first;
    Scalar c = it->second;
    const bool neg = c.num().lex_leading_coeff() < 0;
    if (neg) c = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    const std::string label = "v" + rep.label(idx);
    if (c.is_one()) {
      out += label;
    } else {
      std::string cs = c.to_string();
      if (c.is_polynomial() && c.num().term_count() > 1) cs = "(" + cs + ")";
      out += cs + "*" + label;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ActionCache

const StateVec* ActionCache::find(Op op, int k, const BasisIndex& idx) const {
  std::shared_lock lock(mu_);
  auto it = actions_.find({op, k, idx});
  return it == actions_.end() ? nullptr : it->second.get();
}

const StateVec& ActionCache::insert(Op op, int k, const BasisIndex& idx, StateVec v) {
  std::unique_lock lock(mu_);
  auto [it, inserted] = actions_.try_emplace({op, k, idx}, nullptr);
  if (inserted) it->second = std::make_unique<StateVec>(std::move(v));
  return *it->second;
}

const StateVec* ActionCache::find_word(int sign, const Partition& word, const BasisIndex& idx) const {
  std::shared_lock lock(mu_);
  auto it = words_.find({sign, word, idx});
  return it == words_.end() ? nullptr : it->second.get();
}

const StateVec& ActionCache::insert_word(int sign, const Partition& word, const BasisIndex& idx, StateVec v) {
  std::unique_lock lock(mu_);
  auto [it, inserted] = words_.try_emplace({sign, word, idx}, nullptr);
  if (inserted) it->second = std::make_unique<StateVec>(std::move(v));
  return *it->second;
}

// ---------------------------------------------------------------------------
// Rep defaults

StateVec Rep::raw_B(int, const BasisIndex&) const { throw Error(name() + " does not supply B_k"); }
StateVec Rep::raw_U(int, const BasisIndex&) const { throw Error(name() + " does not supply U_k"); }
StateVec Rep::raw_D(int, const BasisIndex&) const { throw Error(name() + " does not supply D_k"); }

// ---------------------------------------------------------------------------
// Actions

namespace {

using Op = ActionCache::Op;

template <typename F>
StateVec extend_linearly(const StateVec& v, F&& on_basis) {
  StateVec out;
  for (const auto& [idx, c] : v.terms()) out.axpy(c, on_basis(idx));
  return out;
}

// B_{sign*K} from U or D via Newton's identity:
// B_{-K} = K U_K - sum_{i=1}^{K-1} U_{K-i} B_{-i}, and likewise for D.
StateVec newton_B(const Rep& rep, int sign, int K, const BasisIndex& idx) {
  const bool up = sign < 0;
  auto family = [&](int j, const StateVec& v) { return up ? apply_U(rep, j, v) : apply_D(rep, j, v); };
  const StateVec& top = up ? apply_U(rep, K, idx) : apply_D(rep, K, idx);
  StateVec out = Scalar(K) * top;
  for (int i = 1; i < K; ++i) out -= family(K - i, apply_B(rep, sign * i, idx));
  return out;
}

// U_k or D_k as sum_{lambda |- k} z_lambda^{-1} B_{-+lambda}.
StateVec power_sum_family(const Rep& rep, int sign, int k, const BasisIndex& idx) {
  StateVec out;
  for (const auto& lambda : partitions_of(k)) out.axpy(z_of(lambda).inverse(), apply_word(rep, sign, lambda, idx));
  return out;
}

}  // namespace

const StateVec& apply_B(const Rep& rep, int k, const BasisIndex& idx) {
  if (k == 0) throw Error("B_0 is not a generator");
  if (const auto* hit = rep.cache().find(Op::B, k, idx)) return *hit;
  StateVec v;
  if (rep.provides_B()) {
    v = rep.raw_B(k, idx);
  } else if (rep.provides_UD()) {
    v = newton_B(rep, k < 0 ? -1 : 1, k < 0 ? -k : k, idx);
  } else {
    throw Error(rep.name() + " supplies neither B_k nor U_k, D_k");
  }
  return rep.cache().insert(Op::B, k, idx, std::move(v));
}

StateVec apply_B(const Rep& rep, int k, const StateVec& v) {
  return extend_linearly(v, [&](const BasisIndex& i) -> const StateVec& { return apply_B(rep, k, i); });
}

namespace {

const StateVec& apply_UD(const Rep& rep, Op op, int k, const BasisIndex& idx) {
  if (k < 0) throw Error(std::string(1, static_cast<char>(op)) + "_k needs k >= 0");
  if (const auto* hit = rep.cache().find(op, k, idx)) return *hit;
  StateVec v;
  if (k == 0) {
    v = StateVec::basis(idx);
  } else if (rep.provides_UD()) {
    v = op == Op::U ? rep.raw_U(k, idx) : rep.raw_D(k, idx);
  } else if (rep.provides_B()) {
    v = power_sum_family(rep, op == Op::U ? -1 : 1, k, idx);
  } else {
    throw Error(rep.name() + " supplies neither B_k nor U_k, D_k");
  }
  return rep.cache().insert(op, k, idx, std::move(v));
}

}  // namespace

const StateVec& apply_U(const Rep& rep, int k, const BasisIndex& idx) { return apply_UD(rep, Op::U, k, idx); }
const StateVec& apply_D(const Rep& rep, int k, const BasisIndex& idx) { return apply_UD(rep, Op::D, k, idx); }

StateVec apply_U(const Rep& rep, int k, const StateVec& v) {
  return extend_linearly(v, [&](const BasisIndex& i) -> const StateVec& { return apply_U(rep, k, i); });
}

StateVec apply_D(const Rep& rep, int k, const StateVec& v) {
  return extend_linearly(v, [&](const BasisIndex& i) -> const StateVec& { return apply_D(rep, k, i); });
}

const StateVec& apply_word(const Rep& rep, int sign, const Partition& word, const BasisIndex& idx) {
  if (const auto* hit = rep.cache().find_word(sign, word, idx)) return *hit;
  StateVec v;
  if (word.empty()) {
    v = StateVec::basis(idx);
  } else {
    const auto& parts = word.parts();
    const Partition rest(std::vector<int>(parts.begin() + 1, parts.end()));
    v = apply_B(rep, sign * parts.front(), apply_word(rep, sign, rest, idx));
  }
  return rep.cache().insert_word(sign, word, idx, std::move(v));
}

// ---------------------------------------------------------------------------
// Generating functions

std::optional<int> skew_degree(const Rep& rep, const BasisIndex& s, const BasisIndex& t) {
  const int diff = rep.degree(s) - rep.degree(t);
  const int m = rep.degree_step();
  if (diff % m != 0 || diff / m < 0) return std::nullopt;
  return diff / m;
}

SymFunc compute_F(const Rep& rep, const BasisIndex& s, const BasisIndex& t) {
  SymFunc out(Basis::p);
  const auto d = skew_degree(rep, s, t);
  if (!d) return out;
  for (const auto& lambda : partitions_of(*d)) {
    const Scalar c = apply_word(rep, -1, lambda, t).coeff(s);
    if (!c.is_zero()) out.add_term(lambda, c / z_of(lambda));
  }
  return out;
}

SymFunc compute_G(const Rep& rep, const BasisIndex& s, const BasisIndex& t) {
  SymFunc out(Basis::p);
  const auto d = skew_degree(rep, s, t);
  if (!d) return out;
  for (const auto& lambda : partitions_of(*d)) {
    const Scalar c = apply_word(rep, 1, lambda, s).coeff(t);
    if (!c.is_zero()) out.add_term(lambda, c / z_of(lambda));
  }
  return out;
}

Scalar monomial_coeff(const Rep& rep, const BasisIndex& s, const BasisIndex& t, const std::vector<int>& alpha) {
  StateVec v = StateVec::basis(t);
  for (int a : alpha) {
    v = apply_U(rep, a, v);
    if (v.is_zero()) break;
  }
  return v.coeff(s);
}

Scalar monomial_coeff_G(const Rep& rep, const BasisIndex& s, const BasisIndex& t, const std::vector<int>& alpha) {
  StateVec v = StateVec::basis(s);
  for (int a : alpha) {
    v = apply_D(rep, a, v);
    if (v.is_zero()) break;
  }
  return v.coeff(t);
}

SymFunc phi_map(const Rep& rep, const StateVec& v) {
  SymFunc out(Basis::p);
  const BasisIndex b = rep.highest();
  for (const auto& [s, c] : v.terms()) out += c * compute_G(rep, s, b);
  return out;
}

SymFunc bosonic_apply(int k, const SymFunc& f, const HeisenbergParams& a) {
  if (k == 0) throw Error("B_0 is not a generator");
  const SymFunc fp = convert(f, Basis::p);
  if (k < 0) return multiply(SymFunc::element(Basis::p, Partition{-k}, a.a(-k)), fp);
  SymFunc out(Basis::p);
  for (const auto& [lambda, c] : fp.terms()) {
    const int mult = lambda.multiplicity(k);
    if (mult > 0) out.add_term(lambda.without_part(k), Scalar(static_cast<long>(k) * mult) * c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Adjoint

namespace {

class AdjointRep final : public Rep {
 public:
  explicit AdjointRep(RepPtr inner) : inner_(std::move(inner)) {}

  std::string name() const override { return "adjoint(" + inner_->name() + ")"; }
  const HeisenbergParams& params() const override { return inner_->params(); }
  int degree_step() const override { return inner_->degree_step(); }
  int degree(const BasisIndex& idx) const override { return inner_->degree(idx); }
  std::vector<BasisIndex> basis_of_degree(int d) const override { return inner_->basis_of_degree(d); }
  int min_degree() const override { return inner_->min_degree(); }
  BasisIndex highest() const override { return inner_->highest(); }
  bool provides_B() const override { return inner_->provides_B(); }
  bool provides_UD() const override { return inner_->provides_UD(); }

  // theta(B_k) v_{s'} = sum_s <B_{-k} v_s, v_{s'}> v_s.
  StateVec raw_B(int k, const BasisIndex& idx) const override {
    return transpose(idx, -static_cast<long>(k) * degree_step(),
                     [&](const BasisIndex& s) -> const StateVec& { return apply_B(*inner_, -k, s); });
  }
  // theta(U_k) is the transpose of D_k and theta(D_k) that of U_k.
  StateVec raw_U(int k, const BasisIndex& idx) const override {
    return transpose(idx, static_cast<long>(k) * degree_step(),
                     [&](const BasisIndex& s) -> const StateVec& { return apply_D(*inner_, k, s); });
  }
  StateVec raw_D(int k, const BasisIndex& idx) const override {
    return transpose(idx, -static_cast<long>(k) * degree_step(),
                     [&](const BasisIndex& s) -> const StateVec& { return apply_U(*inner_, k, s); });
  }

  std::string label(const BasisIndex& idx) const override { return inner_->label(idx); }
  BasisIndex parse_index(std::string_view text) const override { return inner_->parse_index(text); }

 private:
  template <typename F>
  StateVec transpose(const BasisIndex& target, long shift, F&& op) const {
    StateVec out;
    const long d = inner_->degree(target) + shift;
    if (d < inner_->min_degree()) return out;
    for (const auto& s : inner_->basis_of_degree(static_cast<int>(d))) out.add_term(s, op(s).coeff(target));
    return out;
  }

  RepPtr inner_;
};

}  // namespace

RepPtr adjoint(RepPtr rep) { return std::make_shared<AdjointRep>(std::move(rep)); }

}  // namespace fockbridge
