#include "fockbridge/symfunc.hpp"

#include <algorithm>
#include <mutex>

namespace fockbridge {

char basis_char(Basis b) {
  switch (b) {
    case Basis::p: return 'p';
    case Basis::h: return 'h';
    case Basis::m: return 'm';
    case Basis::s: return 's';
  }
  return '?';
}

Basis parse_basis(std::string_view name) {
  if (name == "p") return Basis::p;
  if (name == "h") return Basis::h;
  if (name == "m") return Basis::m;
  if (name == "s") return Basis::s;
  throw ParseError("unknown basis '" + std::string(name) + "' (expected p, h, m or s)");
}

SymFunc::SymFunc(Basis basis, Terms terms) : basis_(basis), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

SymFunc SymFunc::element(Basis basis, const Partition& lambda, const Scalar& c) {
  SymFunc f(basis);
  f.add_term(lambda, c);
  return f;
}

Scalar SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Scalar() : it->second;
}

int SymFunc::max_degree() const {
  int d = -1;
  for (const auto& [lambda, c] : terms_) d = std::max(d, lambda.size());
  return d;
}

SymFunc SymFunc::homogeneous_part(int d) const {
  SymFunc out(basis_);
  for (const auto& [lambda, c] : terms_)
    if (lambda.size() == d) out.terms_.emplace(lambda, c);
  return out;
}

bool SymFunc::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return kv.first.size() == d; });
}

void SymFunc::add_term(const Partition& lambda, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& g) {
  if (g.basis_ != basis_) return *this += convert(g, basis_);
  for (const auto& [lambda, c] : g.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& g) { return *this += -g; }

SymFunc SymFunc::operator-() const {
  SymFunc out(basis_);
  for (const auto& [lambda, c] : terms_) out.terms_.emplace(lambda, -c);
  return out;
}

SymFunc operator*(const Scalar& c, const SymFunc& f) {
  SymFunc out(f.basis_);
  if (c.is_zero()) return out;
  for (const auto& [lambda, v] : f.terms_) out.terms_.emplace(lambda, c * v);
  return out;
}

SymFunc SymFunc::specialized(const Bindings& b) const {
  SymFunc out(basis_);
  for (const auto& [lambda, c] : terms_) out.add_term(lambda, specialize(c, b));
  return out;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Scalar c = it->second;
    const bool neg = c.num().lex_leading_coeff() < 0;
    if (neg) c = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    const std::string label = std::string(1, basis_char(basis_)) + it->first.to_string();
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
// Transition matrices

namespace {

std::map<Partition, std::size_t> index_of(int d) {
  std::map<Partition, std::size_t> idx;
  const auto parts = partitions_of(d);
  for (std::size_t i = 0; i < parts.size(); ++i) idx.emplace(parts[i], i);
  return idx;
}

// Number of ways to place the parts of lambda into the rows of mu so that
// every row is filled exactly.
long count_fillings(const std::vector<int>& parts, std::size_t i, std::vector<int>& room) {
  if (i == parts.size()) {
    return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; }) ? 1 : 0;
  }
  long total = 0;
  for (auto& r : room) {
    if (r >= parts[i]) {
      r -= parts[i];
      total += count_fillings(parts, i + 1, room);
      r += parts[i];
    }
  }
  return total;
}

ScalarMatrix power_to_monomial(int d) {
  const auto parts = partitions_of(d);
  ScalarMatrix m(parts.size(), std::vector<Scalar>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      std::vector<int> room = parts[j].parts();
      long c = count_fillings(parts[i].parts(), 0, room);
      if (c) m[i][j] = Scalar(c);
    }
  return m;
}

ScalarMatrix schur_to_monomial(int d) {
  const auto parts = partitions_of(d);
  ScalarMatrix m(parts.size(), std::vector<Scalar>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      mpz_class c = tableaux_count(SkewShape(parts[i], Partition()), parts[j].parts());
      if (c != 0) m[i][j] = Scalar(c);
    }
  return m;
}

SymFunc complete_in_power(int n) {
  SymFunc f(Basis::p);
  for (const auto& mu : partitions_of(n)) f.add_term(mu, z_of(mu).inverse());
  return f;
}

ScalarMatrix complete_to_power(int d) {
  const auto parts = partitions_of(d);
  const auto idx = index_of(d);
  ScalarMatrix m(parts.size(), std::vector<Scalar>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    SymFunc prod = SymFunc::one();
    for (int part : parts[i].parts()) prod = multiply(prod, complete_in_power(part));
    for (const auto& [mu, c] : prod.terms()) m[i][idx.at(mu)] = c;
  }
  return m;
}

}  // namespace

TransitionCache& TransitionCache::instance() {
  static TransitionCache cache;
  return cache;
}

void TransitionCache::set_degree_cap(int cap) {
  if (cap < 0) throw Error("degree cap must be >= 0");
  std::unique_lock lock(mu_);
  degree_cap_ = cap;
}

const ScalarMatrix& TransitionCache::matrix(Basis from, Basis to, int d) {
  const auto key = std::make_tuple(from, to, d);
  {
    std::shared_lock lock(mu_);
    if (d > degree_cap_)
      throw Error("degree " + std::to_string(d) + " exceeds the configured degree cap " +
                  std::to_string(degree_cap_));
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  auto built = build(from, to, d);
  std::unique_lock lock(mu_);
  auto [it, inserted] = cache_.emplace(key, std::move(built));
  return *it->second;
}

std::shared_ptr<const ScalarMatrix> TransitionCache::build(Basis from, Basis to, int d) {
  auto make = [](ScalarMatrix m) { return std::make_shared<const ScalarMatrix>(std::move(m)); };
  if (from == to) return make(identity_matrix(partitions_of(d).size()));
  if (from == Basis::p && to == Basis::m) return make(power_to_monomial(d));
  if (from == Basis::s && to == Basis::m) return make(schur_to_monomial(d));
  if (from == Basis::h && to == Basis::p) return make(complete_to_power(d));
  if (from == Basis::m && to == Basis::p) return make(invert(matrix(Basis::p, Basis::m, d)));
  if (from == Basis::m && to == Basis::s) return make(invert(matrix(Basis::s, Basis::m, d)));
  if (from == Basis::p && to == Basis::h) return make(invert(matrix(Basis::h, Basis::p, d)));
  if (from == Basis::p && to == Basis::s)
    return make(multiply(matrix(Basis::p, Basis::m, d), matrix(Basis::m, Basis::s, d)));
  if (from == Basis::s && to == Basis::p)
    return make(multiply(matrix(Basis::s, Basis::m, d), matrix(Basis::m, Basis::p, d)));
  // Everything else routes through the power sums.
  return make(multiply(matrix(from, Basis::p, d), matrix(Basis::p, to, d)));
}

SymFunc complete_h(int k) {
  if (k < 0) throw Error("h_k needs k >= 0");
  return SymFunc::element(Basis::h, k == 0 ? Partition() : Partition{k});
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  std::map<int, std::vector<std::pair<Partition, Scalar>>> by_degree;
  for (const auto& [lambda, c] : f.terms()) by_degree[lambda.size()].emplace_back(lambda, c);
  SymFunc out(target);
  auto& cache = TransitionCache::instance();
  for (const auto& [d, terms] : by_degree) {
    const auto parts = partitions_of(d);
    const auto idx = index_of(d);
    const ScalarMatrix& m = cache.matrix(f.basis(), target, d);
    std::vector<Scalar> acc(parts.size());
    for (const auto& [lambda, c] : terms) {
      const auto& row = m[idx.at(lambda)];
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (!row[j].is_zero()) acc[j] += c * row[j];
    }
    for (std::size_t j = 0; j < parts.size(); ++j) out.add_term(parts[j], acc[j]);
  }
  return out;
}

bool same_element(const SymFunc& f, const SymFunc& g) { return convert(f, g.basis()) == g; }

// ---------------------------------------------------------------------------
// Ring operations

namespace {

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

// p_k^perp = k d/dp_k applied to a p-basis element.
SymFunc power_perp(int k, const SymFunc& f) {
  SymFunc out(Basis::p);
  for (const auto& [lambda, c] : f.terms()) {
    const int mult = lambda.multiplicity(k);
    if (mult == 0) continue;
    out.add_term(lambda.without_part(k), Scalar(static_cast<long>(k) * mult) * c);
  }
  return out;
}

}  // namespace

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  const SymFunc pf = convert(f, Basis::p), pg = convert(g, Basis::p);
  SymFunc out(Basis::p);
  for (const auto& [a, ca] : pf.terms())
    for (const auto& [b, cb] : pg.terms()) out.add_term(union_of(a, b), ca * cb);
  return out;
}

Scalar hall_inner(const SymFunc& f, const SymFunc& g) {
  const SymFunc pf = convert(f, Basis::p), pg = convert(g, Basis::p);
  Scalar acc;
  for (const auto& [lambda, c] : pf.terms()) {
    auto it = pg.terms().find(lambda);
    if (it != pg.terms().end()) acc += c * it->second * z_of(lambda);
  }
  return acc;
}

SymFunc perp_apply(const SymFunc& g, const SymFunc& f) {
  const SymFunc pg = convert(g, Basis::p), pf = convert(f, Basis::p);
  SymFunc out(Basis::p);
  for (const auto& [mu, c] : pg.terms()) {
    SymFunc cur = pf;
    for (int k : mu.parts()) cur = power_perp(k, cur);
    out += c * cur;
  }
  return convert(out, f.basis());
}

SymFunc theta_apply(const SymFunc& f, const HeisenbergParams& a) {
  const SymFunc pf = convert(f, Basis::p);
  SymFunc out(Basis::p);
  for (const auto& [lambda, c] : pf.terms()) {
    Scalar w = c;
    for (int k : lambda.parts()) w *= a.a(k);
    out.add_term(lambda, w);
  }
  return out;
}

Scalar kappa_eval(const SymFunc& f, const HeisenbergParams& a) {
  const SymFunc pf = convert(f, Basis::p);
  Scalar acc;
  for (const auto& [lambda, c] : pf.terms()) {
    Scalar w = c;
    for (int k : lambda.parts()) w *= a.a(k);
    acc += w;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Tableaux

mpz_class tableaux_count(const SkewShape& shape, const std::vector<int>& weight) {
  std::map<Partition, mpz_class> layer{{shape.inner(), 1}};
  for (int w : weight) {
    if (w < 0) throw Error("tableau weights must be nonnegative");
    if (w == 0) continue;
    std::map<Partition, mpz_class> next;
    for (const auto& [lambda, count] : layer)
      for (const auto& mu : horizontal_strips(lambda, w))
        if (shape.outer().contains(mu)) next[mu] += count;
    layer = std::move(next);
  }
  auto it = layer.find(shape.outer());
  return it == layer.end() ? mpz_class(0) : it->second;
}

std::vector<std::vector<Partition>> tableaux_chains(const SkewShape& shape, const std::vector<int>& weight) {
  std::vector<std::vector<Partition>> chains{{shape.inner()}};
  for (int w : weight) {
    if (w < 0) throw Error("tableau weights must be nonnegative");
    std::vector<std::vector<Partition>> next;
    for (const auto& chain : chains) {
      if (w == 0) {
        auto c = chain;
        c.push_back(chain.back());
        next.push_back(std::move(c));
        continue;
      }
      for (const auto& mu : horizontal_strips(chain.back(), w)) {
        if (!shape.outer().contains(mu)) continue;
        auto c = chain;
        c.push_back(mu);
        next.push_back(std::move(c));
      }
    }
    chains = std::move(next);
  }
  std::erase_if(chains, [&](const auto& c) { return !(c.back() == shape.outer()); });
  return chains;
}

SymFunc schur_tableaux(const SkewShape& shape) {
  SymFunc out(Basis::m);
  for (const auto& mu : partitions_of(shape.size())) {
    mpz_class c = tableaux_count(shape, mu.parts());
    if (c != 0) out.add_term(mu, Scalar(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite-variable evaluation

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Scalar& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::over(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) {
      const bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& kv) { return kv.first[i] != 0; });
      if (used) throw Error("variable " + vars_[i] + " missing from target variable list");
      pos[i] = vars.size();
      continue;
    }
    pos[i] = static_cast<std::size_t>(it - vars.begin());
  }
  MultiPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (pos[i] < vars.size()) ne[pos[i]] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

MultiPoly MultiPoly::truncated(const std::function<bool(const Exponents&)>& keep) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_)
    if (keep(e)) out.terms_.emplace(e, c);
  return out;
}

namespace {

std::vector<std::string> merged_vars(const MultiPoly& a, const MultiPoly& b) {
  std::vector<std::string> vars = a.vars();
  for (const auto& v : b.vars())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  return vars;
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  const auto vars = merged_vars(a, b);
  MultiPoly out = a.over(vars);
  for (const auto& [e, c] : b.over(vars).terms_) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  const auto vars = merged_vars(a, b);
  MultiPoly out = a.over(vars);
  for (const auto& [e, c] : b.over(vars).terms_) out.add_term(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const auto vars = merged_vars(a, b);
  const MultiPoly x = a.over(vars), y = b.over(vars);
  MultiPoly out(vars);
  for (const auto& [ea, ca] : x.terms_)
    for (const auto& [eb, cb] : y.terms_) {
      MultiPoly::Exponents e(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  const auto vars = merged_vars(a, b);
  return a.over(vars).terms_ == b.over(vars).terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (it->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
    }
    const Scalar& c = it->second;
    if (mono.empty())
      out += c.to_string();
    else if (c.is_one())
      out += mono;
    else
      out += "(" + c.to_string() + ")*" + mono;
  }
  return out;
}

MultiPoly evaluate_vars(const SymFunc& f, const std::vector<std::string>& vars) {
  const SymFunc mf = convert(f, Basis::m);
  const int n = static_cast<int>(vars.size());
  MultiPoly out(vars);
  for (const auto& [mu, c] : mf.terms()) {
    if (mu.length() > n) continue;
    std::vector<int> e(n, 0);
    std::copy(mu.parts().begin(), mu.parts().end(), e.begin());
    std::sort(e.begin(), e.end());
    do {
      out.add_term(e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return out;
}

}  // namespace fockbridge
