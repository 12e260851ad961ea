#include "fockbridge/reps.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace fockbridge {

namespace {

int checked_partition_degree(const BasisIndex& idx) { return index_partition(idx).size(); }

std::vector<BasisIndex> partition_indices(int d) {
  std::vector<BasisIndex> out;
  if (d < 0) return out;
  for (const auto& p : partitions_of(d)) out.push_back(partition_index(p));
  return out;
}

// ---------------------------------------------------------------------------
// Fermionic Fock space

class FermionicRep final : public Rep {
 public:
  std::string name() const override { return "fermionic"; }
  const HeisenbergParams& params() const override { return params_; }
  int degree_step() const override { return 1; }
  int degree(const BasisIndex& idx) const override { return checked_partition_degree(idx); }
  std::vector<BasisIndex> basis_of_degree(int d) const override { return partition_indices(d); }
  BasisIndex highest() const override { return partition_index(Partition()); }
  bool provides_B() const override { return true; }

  StateVec raw_B(int k, const BasisIndex& idx) const override {
    const Partition lambda = index_partition(idx);
    // Window of the first N indices; everything below is v_{-N} ^ v_{-N-1} ^ ...
    const int n = lambda.length() + std::abs(k);
    std::vector<int> wedge(n);
    for (int j = 0; j < n; ++j) wedge[j] = lambda.part(j + 1) - j;

    StateVec out;
    for (int j = 0; j < n; ++j) {
      const int moved = wedge[j] - k;
      if (moved <= -n) continue;
      if (std::find(wedge.begin(), wedge.end(), moved) != wedge.end()) continue;
      int crossings = 0;
      for (int i = 0; i < n; ++i) {
        if (i < j && wedge[i] < moved) ++crossings;
        if (i > j && wedge[i] > moved) ++crossings;
      }
      std::vector<int> seq = wedge;
      seq[j] = moved;
      std::sort(seq.begin(), seq.end(), std::greater<>());
      std::vector<int> parts(n);
      for (int i = 0; i < n; ++i) parts[i] = seq[i] + i;
      out.add_term(partition_index(Partition::from_unsorted(parts)), Scalar(crossings % 2 ? -1 : 1));
    }
    return out;
  }

  std::string label(const BasisIndex& idx) const override { return index_partition(idx).to_string(); }
  BasisIndex parse_index(std::string_view text) const override { return partition_index(Partition::parse(text)); }

 private:
  HeisenbergParams params_ = HeisenbergParams::unit();
};

// ---------------------------------------------------------------------------
// Macdonald module

class MacdonaldRep final : public Rep {
 public:
  std::string name() const override { return "macdonald"; }
  const HeisenbergParams& params() const override { return params_; }
  int degree_step() const override { return 1; }
  int degree(const BasisIndex& idx) const override { return checked_partition_degree(idx); }
  std::vector<BasisIndex> basis_of_degree(int d) const override { return partition_indices(d); }
  BasisIndex highest() const override { return partition_index(Partition()); }
  bool provides_UD() const override { return true; }

  StateVec raw_U(int k, const BasisIndex& idx) const override {
    const Partition lambda = index_partition(idx);
    StateVec out;
    for (const auto& mu : horizontal_strips(lambda, k))
      out.add_term(partition_index(mu), macdonald_phi_psi(SkewShape(mu, lambda)).first);
    return out;
  }

  StateVec raw_D(int k, const BasisIndex& idx) const override {
    const Partition lambda = index_partition(idx);
    StateVec out;
    for (const auto& mu : horizontal_strips_below(lambda, k))
      out.add_term(partition_index(mu), macdonald_phi_psi(SkewShape(lambda, mu)).second);
    return out;
  }

  std::string label(const BasisIndex& idx) const override { return index_partition(idx).to_string(); }
  BasisIndex parse_index(std::string_view text) const override { return partition_index(Partition::parse(text)); }

 private:
  HeisenbergParams params_ = HeisenbergParams::macdonald();
};

void require_compatible(const std::vector<RepPtr>& reps, const char* what) {
  if (reps.empty()) throw Error(std::string(what) + " of no representations");
  for (const auto& r : reps) {
    if (!r) throw Error(std::string(what) + " of a null representation");
    if (r->degree_step() != reps.front()->degree_step())
      throw Error(std::string(what) + ": degree steps differ (" + reps.front()->name() + " vs " + r->name() + ")");
    if (!r->params().agrees_with(reps.front()->params()))
      throw Error(std::string(what) + ": Heisenberg parameters differ (" + reps.front()->name() + " vs " + r->name() +
                  ")");
  }
}

std::string join_names(const std::vector<RepPtr>& reps, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < reps.size(); ++i) out += (i ? sep : "") + reps[i]->name();
  return out;
}

// Splits at top-level occurrences of sep, ignoring separators nested in
// brackets or parentheses.
std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

// ---------------------------------------------------------------------------
// Direct sum

class DirectSumRep final : public Rep {
 public:
  explicit DirectSumRep(std::vector<RepPtr> summands) : summands_(std::move(summands)) {
    require_compatible(summands_, "direct sum");
  }

  std::string name() const override { return "(" + join_names(summands_, " + ") + ")"; }
  const HeisenbergParams& params() const override { return summands_.front()->params(); }
  int degree_step() const override { return summands_.front()->degree_step(); }
  int degree(const BasisIndex& idx) const override { return summand(idx).degree(inner(idx)); }

  std::vector<BasisIndex> basis_of_degree(int d) const override {
    std::vector<BasisIndex> out;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
      if (d < summands_[i]->min_degree()) continue;
      for (const auto& b : summands_[i]->basis_of_degree(d)) out.push_back(wrap(i, b));
    }
    return out;
  }

  int min_degree() const override {
    int m = summands_.front()->min_degree();
    for (const auto& s : summands_) m = std::min(m, s->min_degree());
    return m;
  }

  BasisIndex highest() const override { return wrap(0, summands_.front()->highest()); }
  bool provides_B() const override { return true; }
  bool provides_UD() const override { return true; }

  StateVec raw_B(int k, const BasisIndex& idx) const override { return lift(idx, apply_B(summand(idx), k, inner(idx))); }
  StateVec raw_U(int k, const BasisIndex& idx) const override { return lift(idx, apply_U(summand(idx), k, inner(idx))); }
  StateVec raw_D(int k, const BasisIndex& idx) const override { return lift(idx, apply_D(summand(idx), k, inner(idx))); }

  std::string label(const BasisIndex& idx) const override {
    return std::to_string(idx.code.at(0)) + ":" + summand(idx).label(inner(idx));
  }

  BasisIndex parse_index(std::string_view text) const override {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("direct sum index needs the form <summand>:<label>");
    std::size_t which = 0;
    try {
      which = std::stoul(trim(text.substr(0, colon)));
    } catch (const std::exception&) {
      throw ParseError("bad summand number in '" + std::string(text) + "'");
    }
    if (which >= summands_.size()) throw ParseError("summand " + std::to_string(which) + " does not exist");
    return wrap(which, summands_[which]->parse_index(trim(text.substr(colon + 1))));
  }

 private:
  static BasisIndex wrap(std::size_t i, const BasisIndex& b) {
    BasisIndex out;
    out.code.reserve(b.code.size() + 1);
    out.code.push_back(static_cast<int>(i));
    out.code.insert(out.code.end(), b.code.begin(), b.code.end());
    return out;
  }
  static BasisIndex inner(const BasisIndex& idx) { return BasisIndex{{idx.code.begin() + 1, idx.code.end()}}; }
  const Rep& summand(const BasisIndex& idx) const { return *summands_.at(idx.code.at(0)); }

  static StateVec lift(const BasisIndex& idx, const StateVec& v) {
    StateVec out;
    for (const auto& [b, c] : v.terms()) out.add_term(wrap(idx.code.at(0), b), c);
    return out;
  }

  std::vector<RepPtr> summands_;
};

// ---------------------------------------------------------------------------
// Tensor product

class TensorRep final : public Rep {
 public:
  explicit TensorRep(std::vector<RepPtr> factors)
      : factors_(std::move(factors)),
        params_((require_compatible(factors_, "tensor product"),
                 factors_.front()->params().scaled(static_cast<long>(factors_.size())))) {}

  std::string name() const override { return "(" + join_names(factors_, " x ") + ")"; }
  const HeisenbergParams& params() const override { return params_; }
  int degree_step() const override { return factors_.front()->degree_step(); }

  int degree(const BasisIndex& idx) const override {
    const auto parts = split(idx);
    int d = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) d += factors_[i]->degree(parts[i]);
    return d;
  }

  std::vector<BasisIndex> basis_of_degree(int d) const override {
    std::vector<BasisIndex> out;
    std::vector<BasisIndex> current;
    enumerate(0, d, current, out);
    return out;
  }

  int min_degree() const override {
    int m = 0;
    for (const auto& f : factors_) m += f->min_degree();
    return m;
  }

  BasisIndex highest() const override {
    std::vector<BasisIndex> parts;
    for (const auto& f : factors_) parts.push_back(f->highest());
    return join(parts);
  }

  bool provides_B() const override { return true; }
  bool provides_UD() const override { return true; }

  StateVec raw_B(int k, const BasisIndex& idx) const override {
    auto parts = split(idx);
    StateVec out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const BasisIndex keep = parts[i];
      for (const auto& [b, c] : apply_B(*factors_[i], k, keep).terms()) {
        parts[i] = b;
        out.add_term(join(parts), c);
      }
      parts[i] = keep;
    }
    return out;
  }

  // U_k(v_1 x ... x v_n) = sum over k_1 + ... + k_n = k of U_{k_1} v_1 x ... x U_{k_n} v_n.
  StateVec raw_U(int k, const BasisIndex& idx) const override { return coproduct(k, idx, true); }
  StateVec raw_D(int k, const BasisIndex& idx) const override { return coproduct(k, idx, false); }

  std::string label(const BasisIndex& idx) const override {
    const auto parts = split(idx);
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::string l = factors_[i]->label(parts[i]);
      if (split_top_level(l, '|').size() > 1) l = "(" + l + ")";
      out += (i ? "|" : "") + l;
    }
    return out;
  }

  BasisIndex parse_index(std::string_view text) const override {
    const auto pieces = split_top_level(text, '|');
    if (pieces.size() != factors_.size())
      throw ParseError("tensor index '" + std::string(text) + "' needs " + std::to_string(factors_.size()) +
                       " factors separated by '|'");
    std::vector<BasisIndex> parts;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      std::string p = trim(pieces[i]);
      if (p.size() >= 2 && p.front() == '(' && p.back() == ')') p = p.substr(1, p.size() - 2);
      parts.push_back(factors_[i]->parse_index(p));
    }
    return join(parts);
  }

 private:
  static BasisIndex join(const std::vector<BasisIndex>& parts) {
    BasisIndex out;
    for (const auto& p : parts) {
      out.code.push_back(static_cast<int>(p.code.size()));
      out.code.insert(out.code.end(), p.code.begin(), p.code.end());
    }
    return out;
  }

  std::vector<BasisIndex> split(const BasisIndex& idx) const {
    std::vector<BasisIndex> out;
    std::size_t pos = 0;
    while (pos < idx.code.size()) {
      const auto len = static_cast<std::size_t>(idx.code[pos]);
      if (pos + 1 + len > idx.code.size()) throw Error("malformed tensor index");
      out.push_back(BasisIndex{{idx.code.begin() + pos + 1, idx.code.begin() + pos + 1 + len}});
      pos += 1 + len;
    }
    if (out.size() != factors_.size()) throw Error("malformed tensor index");
    return out;
  }

  void enumerate(std::size_t i, int remaining, std::vector<BasisIndex>& current, std::vector<BasisIndex>& out) const {
    if (i == factors_.size()) {
      if (remaining == 0) out.push_back(join(current));
      return;
    }
    int rest_min = 0;
    for (std::size_t j = i + 1; j < factors_.size(); ++j) rest_min += factors_[j]->min_degree();
    for (int d = factors_[i]->min_degree(); d <= remaining - rest_min; ++d) {
      for (const auto& b : factors_[i]->basis_of_degree(d)) {
        current.push_back(b);
        enumerate(i + 1, remaining - d, current, out);
        current.pop_back();
      }
    }
  }

  StateVec coproduct(int k, const BasisIndex& idx, bool up) const {
    const auto parts = split(idx);
    StateVec out;
    std::vector<BasisIndex> current;
    distribute(0, k, Scalar(1), parts, current, up, out);
    return out;
  }

  void distribute(std::size_t i, int remaining, const Scalar& coeff, const std::vector<BasisIndex>& parts,
                  std::vector<BasisIndex>& current, bool up, StateVec& out) const {
    if (i + 1 == factors_.size()) {
      const auto& v = up ? apply_U(*factors_[i], remaining, parts[i]) : apply_D(*factors_[i], remaining, parts[i]);
      for (const auto& [b, c] : v.terms()) {
        current.push_back(b);
        out.add_term(join(current), coeff * c);
        current.pop_back();
      }
      return;
    }
    for (int j = 0; j <= remaining; ++j) {
      const auto& v = up ? apply_U(*factors_[i], j, parts[i]) : apply_D(*factors_[i], j, parts[i]);
      for (const auto& [b, c] : v.terms()) {
        current.push_back(b);
        distribute(i + 1, remaining - j, coeff * c, parts, current, up, out);
        current.pop_back();
      }
    }
  }

  std::vector<RepPtr> factors_;
  HeisenbergParams params_;
};

// ---------------------------------------------------------------------------
// LLT Fock space at q = 1

class LltQ1Rep final : public Rep {
 public:
  explicit LltQ1Rep(int n) : n_(n), params_(HeisenbergParams::unit().scaled(n)), fermionic_(fermionic_rep()) {
    if (n < 2) throw Error("llt_q1_rep needs n >= 2");
  }

  std::string name() const override { return "llt1:" + std::to_string(n_); }
  const HeisenbergParams& params() const override { return params_; }
  int degree_step() const override { return n_; }
  int degree(const BasisIndex& idx) const override { return checked_partition_degree(idx); }
  std::vector<BasisIndex> basis_of_degree(int d) const override { return partition_indices(d); }
  BasisIndex highest() const override { return partition_index(Partition()); }
  bool provides_B() const override { return true; }

  StateVec raw_B(int k, const BasisIndex& idx) const override {
    CoreQuotient cq = core_quotient(index_partition(idx), n_);
    StateVec out;
    for (int r = 0; r < n_; ++r) {
      const Partition keep = cq.quotient[r];
      for (const auto& [b, c] : apply_B(*fermionic_, k, partition_index(keep)).terms()) {
        cq.quotient[r] = index_partition(b);
        out.add_term(partition_index(from_core_quotient(cq, n_)), c);
      }
      cq.quotient[r] = keep;
    }
    return out;
  }

  std::string label(const BasisIndex& idx) const override { return index_partition(idx).to_string(); }
  BasisIndex parse_index(std::string_view text) const override { return partition_index(Partition::parse(text)); }

 private:
  int n_;
  HeisenbergParams params_;
  RepPtr fermionic_;
};

// ---------------------------------------------------------------------------
// Specialization

class SpecializedRep final : public Rep {
 public:
  SpecializedRep(RepPtr inner, Bindings b)
      : inner_(std::move(inner)), bindings_(std::move(b)), params_(inner_->params().specialized(bindings_)) {}

  std::string name() const override { return inner_->name() + "|" + bindings_.to_string(); }
  const HeisenbergParams& params() const override { return params_; }
  int degree_step() const override { return inner_->degree_step(); }
  int degree(const BasisIndex& idx) const override { return inner_->degree(idx); }
  std::vector<BasisIndex> basis_of_degree(int d) const override { return inner_->basis_of_degree(d); }
  int min_degree() const override { return inner_->min_degree(); }
  BasisIndex highest() const override { return inner_->highest(); }
  bool provides_B() const override { return inner_->provides_B(); }
  bool provides_UD() const override { return inner_->provides_UD(); }

  StateVec raw_B(int k, const BasisIndex& idx) const override { return special(apply_B(*inner_, k, idx)); }
  StateVec raw_U(int k, const BasisIndex& idx) const override { return special(apply_U(*inner_, k, idx)); }
  StateVec raw_D(int k, const BasisIndex& idx) const override { return special(apply_D(*inner_, k, idx)); }

  std::string label(const BasisIndex& idx) const override { return inner_->label(idx); }
  BasisIndex parse_index(std::string_view text) const override { return inner_->parse_index(text); }

 private:
  StateVec special(const StateVec& v) const {
    StateVec out;
    for (const auto& [b, c] : v.terms()) out.add_term(b, specialize(c, bindings_));
    return out;
  }

  RepPtr inner_;
  Bindings bindings_;
  HeisenbergParams params_;
};

// ---------------------------------------------------------------------------
// Matrix bundles

class BundleRep final : public Rep {
 public:
  BundleRep(const nlohmann::json& doc, std::string name) : name_(std::move(name)), params_(unspecified()) {
    try {
      load(doc);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("malformed matrix bundle: " + std::string(e.what()));
    }
  }

  std::string name() const override { return name_; }
  const HeisenbergParams& params() const override { return params_; }
  int degree_step() const override { return step_; }
  int degree(const BasisIndex& idx) const override { return degree_of_.at(position(idx)); }

  std::vector<BasisIndex> basis_of_degree(int d) const override {
    if (d > max_degree_)
      throw Error("bundle " + name_ + " covers degrees up to " + std::to_string(max_degree_) + ", not " +
                  std::to_string(d));
    std::vector<BasisIndex> out;
    auto it = by_degree_.find(d);
    if (it == by_degree_.end()) return out;
    for (int p : it->second) out.push_back(BasisIndex{{p}});
    return out;
  }

  int min_degree() const override { return min_degree_; }
  BasisIndex highest() const override { return BasisIndex{{highest_}}; }
  bool provides_UD() const override { return true; }

  StateVec raw_U(int k, const BasisIndex& idx) const override { return act('U', k, idx); }
  StateVec raw_D(int k, const BasisIndex& idx) const override { return act('D', k, idx); }

  std::string label(const BasisIndex& idx) const override { return labels_.at(position(idx)); }

  BasisIndex parse_index(std::string_view text) const override {
    auto it = by_label_.find(strip_spaces(text));
    if (it == by_label_.end()) throw ParseError("bundle " + name_ + " has no basis vector '" + std::string(text) + "'");
    return BasisIndex{{it->second}};
  }

 private:
  static HeisenbergParams unspecified() {
    return HeisenbergParams("unspecified", [](int) -> Scalar { throw Error("matrix bundle carries no parameters"); });
  }

  static std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
      if (c != ' ') out += c;
    return out;
  }

  static Scalar entry(const nlohmann::json& e) {
    if (e.is_number_integer()) return Scalar(e.get<long>());
    if (e.is_string()) return Scalar::parse(e.get<std::string>());
    throw ParseError("matrix entries must be scalar strings or integers");
  }

  void load(const nlohmann::json& doc) {
    step_ = doc.value("degree_step", 1);
    if (step_ == 0) throw ParseError("degree_step must be nonzero");
    if (doc.contains("params")) {
      std::vector<Scalar> a;
      for (const auto& e : doc.at("params")) a.push_back(entry(e));
      params_ = HeisenbergParams::from_list(std::move(a));
    }
    bool first = true;
    for (const auto& block : doc.at("degrees")) {
      const int d = block.at("degree").get<int>();
      if (by_degree_.count(d)) throw ParseError("degree " + std::to_string(d) + " listed twice");
      auto& slot = by_degree_[d];
      for (const auto& l : block.at("basis")) {
        const std::string label = strip_spaces(l.get<std::string>());
        if (by_label_.count(label)) throw ParseError("basis label '" + label + "' repeated");
        const int pos = static_cast<int>(labels_.size());
        labels_.push_back(label);
        degree_of_.push_back(d);
        by_label_.emplace(label, pos);
        slot.push_back(pos);
      }
      min_degree_ = first ? d : std::min(min_degree_, d);
      max_degree_ = first ? d : std::max(max_degree_, d);
      first = false;
    }
    if (labels_.empty()) throw ParseError("matrix bundle has an empty basis");
    if (doc.contains("highest")) {
      highest_ = parse_index(doc.at("highest").get<std::string>()).code.at(0);
    } else {
      highest_ = by_degree_.at(min_degree_).front();
    }
    for (const auto& op : doc.at("operators")) {
      const std::string kind = op.at("op").get<std::string>();
      if (kind != "U" && kind != "D") throw ParseError("operator must be \"U\" or \"D\", got \"" + kind + "\"");
      const int k = op.at("k").get<int>();
      if (k < 1) throw ParseError("operator index k must be >= 1");
      const int from = op.at("from_degree").get<int>();
      const int to = kind == "U" ? from + step_ * k : from - step_ * k;
      const std::size_t rows = dim(to), cols = dim(from);
      ScalarMatrix m;
      for (const auto& row : op.at("matrix")) {
        std::vector<Scalar> r;
        for (const auto& e : row) r.push_back(entry(e));
        if (r.size() != cols)
          throw ParseError(kind + "_" + std::to_string(k) + " from degree " + std::to_string(from) + ": row has " +
                           std::to_string(r.size()) + " entries, expected " + std::to_string(cols));
        m.push_back(std::move(r));
      }
      if (m.size() != rows)
        throw ParseError(kind + "_" + std::to_string(k) + " from degree " + std::to_string(from) + ": " +
                         std::to_string(m.size()) + " rows, expected " + std::to_string(rows));
      if (!ops_.emplace(std::make_tuple(kind[0], k, from), std::move(m)).second)
        throw ParseError(kind + "_" + std::to_string(k) + " from degree " + std::to_string(from) + " given twice");
    }
  }

  std::size_t dim(int d) const {
    auto it = by_degree_.find(d);
    return it == by_degree_.end() ? 0 : it->second.size();
  }

  int position(const BasisIndex& idx) const {
    if (idx.code.size() != 1 || idx.code[0] < 0 || idx.code[0] >= static_cast<int>(labels_.size()))
      throw Error("index does not belong to bundle " + name_);
    return idx.code[0];
  }

  StateVec act(char op, int k, const BasisIndex& idx) const {
    const int p = position(idx);
    const int from = degree_of_[p];
    const int to = op == 'U' ? from + step_ * k : from - step_ * k;
    StateVec out;
    if (to < min_degree_) return out;
    if (to > max_degree_)
      throw Error("bundle " + name_ + " covers degrees up to " + std::to_string(max_degree_) + "; " +
                  std::string(1, op) + "_" + std::to_string(k) + " from degree " + std::to_string(from) +
                  " leaves it");
    if (dim(to) == 0) return out;
    auto it = ops_.find({op, k, from});
    if (it == ops_.end())
      throw Error("bundle " + name_ + " lacks " + std::string(1, op) + "_" + std::to_string(k) + " from degree " +
                  std::to_string(from));
    const auto& cols = by_degree_.at(from);
    const auto col = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), p) - cols.begin());
    const auto& targets = by_degree_.at(to);
    for (std::size_t i = 0; i < targets.size(); ++i) out.add_term(BasisIndex{{targets[i]}}, it->second[i][col]);
    return out;
  }

  std::string name_;
  HeisenbergParams params_;
  int step_ = 1;
  int min_degree_ = 0;
  int max_degree_ = 0;
  int highest_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> degree_of_;
  std::map<std::string, int> by_label_;
  std::map<int, std::vector<int>> by_degree_;
  std::map<std::tuple<char, int, int>, ScalarMatrix> ops_;
};

}  // namespace

RepPtr fermionic_rep() {
  static const RepPtr rep = std::make_shared<FermionicRep>();
  return rep;
}

Scalar macdonald_b(const Partition& lambda, Cell s) {
  if (!lambda.contains(s)) return Scalar(1);
  const auto [a, l] = arm_leg(lambda, s);
  const Scalar q = Scalar::q(), t = Scalar::t();
  return (Scalar(1) - q.pow(a) * t.pow(l + 1)) / (Scalar(1) - q.pow(a + 1) * t.pow(l));
}

std::pair<Scalar, Scalar> macdonald_phi_psi(const SkewShape& shape) {
  if (!shape.is_horizontal_strip()) throw Error(shape.to_string() + " is not a horizontal strip");
  std::set<int> cols, rows;
  for (const auto& c : shape.cells()) {
    cols.insert(c.col);
    rows.insert(c.row);
  }
  const Partition& outer = shape.outer();
  const Partition& inner = shape.inner();
  Scalar phi(1), psi(1);
  for (int r = 1; r <= outer.length(); ++r) {
    for (int c = 1; c <= outer.part(r); ++c) {
      const Cell s{r, c};
      if (cols.count(c)) {
        phi *= macdonald_b(outer, s) / macdonald_b(inner, s);
      } else if (rows.count(r)) {
        psi *= macdonald_b(inner, s) / macdonald_b(outer, s);
      }
    }
  }
  return {phi, psi};
}

RepPtr macdonald_rep() {
  static const RepPtr rep = std::make_shared<MacdonaldRep>();
  return rep;
}

RepPtr direct_sum(std::vector<RepPtr> summands) { return std::make_shared<DirectSumRep>(std::move(summands)); }

RepPtr tensor(std::vector<RepPtr> factors) { return std::make_shared<TensorRep>(std::move(factors)); }

RepPtr llt_q1_rep(int n) { return std::make_shared<LltQ1Rep>(n); }

RepPtr specialized_rep(RepPtr rep, const Bindings& bindings) {
  if (bindings.empty()) return rep;
  return std::make_shared<SpecializedRep>(std::move(rep), bindings);
}

RepPtr bundle_from_json(const nlohmann::json& doc, std::string name) {
  return std::make_shared<BundleRep>(doc, std::move(name));
}

RepPtr load_bundle(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open bundle " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bundle " + path.string() + " is not valid JSON: " + e.what());
  }
  return bundle_from_json(doc, path.filename().string());
}

nlohmann::json export_bundle(const Rep& rep, int max_degree, int k_max) {
  nlohmann::json doc;
  const int m = rep.degree_step();
  const int lo = rep.min_degree();
  doc["degree_step"] = m;
  std::vector<std::string> params;
  try {
    for (int k = 1; k <= k_max; ++k) params.push_back(rep.params().a(k).to_string());
    doc["params"] = params;
  } catch (const Error&) {
  }
  doc["highest"] = rep.label(rep.highest());
  std::map<int, std::vector<BasisIndex>> basis;
  doc["degrees"] = nlohmann::json::array();
  for (int d = lo; d <= max_degree; ++d) {
    basis[d] = rep.basis_of_degree(d);
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& b : basis[d]) labels.push_back(rep.label(b));
    doc["degrees"].push_back({{"degree", d}, {"basis", labels}});
  }
  doc["operators"] = nlohmann::json::array();
  for (int d = lo; d <= max_degree; ++d) {
    for (int k = 1; k <= k_max; ++k) {
      for (char op : {'U', 'D'}) {
        const int to = op == 'U' ? d + m * k : d - m * k;
        if (to < lo || to > max_degree || basis[d].empty() || basis[to].empty()) continue;
        nlohmann::json matrix = nlohmann::json::array();
        for (const auto& target : basis[to]) {
          nlohmann::json row = nlohmann::json::array();
          for (const auto& source : basis[d]) {
            const auto& v = op == 'U' ? apply_U(rep, k, source) : apply_D(rep, k, source);
            row.push_back(v.coeff(target).to_string());
          }
          matrix.push_back(row);
        }
        doc["operators"].push_back({{"op", std::string(1, op)}, {"k", k}, {"from_degree", d}, {"matrix", matrix}});
      }
    }
  }
  return doc;
}

}  // namespace fockbridge
