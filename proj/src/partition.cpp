#include "fockbridge/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace fockbridge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("partition must look like [3,1,1]: \"" + std::string(text) + "\"");
  std::vector<int> parts;
  std::string body = s.substr(1, s.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = body.find(',', pos);
    std::string tok = body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad partition part in \"" + std::string(text) + "\"");
    parts.push_back(std::stoi(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
    if (pos == body.size()) throw ParseError("trailing comma in \"" + std::string(text) + "\"");
  }
  try {
    return Partition(std::move(parts));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

Partition Partition::without_part(int k) const {
  auto it = std::find(parts_.begin(), parts_.end(), k);
  if (it == parts_.end()) throw Error("partition " + to_string() + " has no part " + std::to_string(k));
  std::vector<int> p = parts_;
  p.erase(p.begin() + (it - parts_.begin()));
  return Partition(std::move(p));
}

Partition Partition::with_part(int k) const {
  std::vector<int> p = parts_;
  p.push_back(k);
  return from_unsorted(std::move(p));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw Error("malformed skew shape: " + inner_.to_string() + " is not contained in " + outer_.to_string());
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
  return out;
}

bool SkewShape::is_horizontal_strip() const {
  // At most one cell per column: outer_{i+1} <= inner_i.
  for (int i = 1; i < outer_.length(); ++i)
    if (outer_.part(i + 1) > inner_.part(i)) return false;
  return true;
}

mpz_class z_value(const Partition& lambda) {
  mpz_class z = 1;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const unsigned long m = j - i;
    mpz_class f, pw;
    mpz_fac_ui(f.get_mpz_t(), m);
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[i]), m);
    z *= f * pw;
    i = j;
  }
  return z;
}

Scalar z_of(const Partition& lambda) { return Scalar(z_value(lambda)); }

namespace {

void strips_above(const Partition& lambda, int row, int remaining, std::vector<int>& cur,
                  std::vector<Partition>& out) {
  const int len = lambda.length();
  if (row > len + 1) {
    if (remaining == 0) out.push_back(Partition::from_unsorted(cur));
    return;
  }
  const int lo = lambda.part(row);
  const int hi = row == 1 ? lambda.part(1) + remaining : std::min(lambda.part(row - 1), lo + remaining);
  for (int v = hi; v >= lo; --v) {
    cur.push_back(v);
    strips_above(lambda, row + 1, remaining - (v - lo), cur, out);
    cur.pop_back();
  }
}

void strips_below(const Partition& lambda, int row, int remaining, std::vector<int>& cur,
                  std::vector<Partition>& out) {
  const int len = lambda.length();
  if (row > len) {
    if (remaining == 0) out.push_back(Partition::from_unsorted(cur));
    return;
  }
  const int hi = lambda.part(row);
  const int lo = std::max(lambda.part(row + 1), hi - remaining);
  for (int v = hi; v >= lo; --v) {
    cur.push_back(v);
    strips_below(lambda, row + 1, remaining - (hi - v), cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> horizontal_strips(const Partition& lambda, int k) {
  if (k < 1) throw Error("horizontal_strips needs k >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  strips_above(lambda, 1, k, cur, out);
  return out;
}

std::vector<Partition> horizontal_strips_below(const Partition& lambda, int k) {
  if (k < 1) throw Error("horizontal_strips_below needs k >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  strips_below(lambda, 1, k, cur, out);
  return out;
}

std::pair<int, int> arm_leg(const Partition& lambda, Cell s) {
  if (!lambda.contains(s))
    throw Error("cell (" + std::to_string(s.row) + "," + std::to_string(s.col) + ") is outside " +
                lambda.to_string());
  const int arm = lambda.part(s.row) - s.col;
  int leg = 0;
  while (lambda.part(s.row + leg + 1) >= s.col) ++leg;
  return {arm, leg};
}

namespace {

int beads_for(int length, int n) { return (length + n - 1) / n * n; }

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int count = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < count; ++i) parts.push_back(beta[i] - (count - 1 - i));
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace

CoreQuotient core_quotient(const Partition& lambda, int n) {
  if (n < 2) throw Error("core_quotient needs n >= 2");
  const int beads = beads_for(lambda.length(), n);
  std::vector<std::vector<int>> levels(n);
  for (int i = 1; i <= beads; ++i) {
    const int beta = lambda.part(i) + (beads - i);
    levels[beta % n].push_back(beta / n);
  }
  CoreQuotient out;
  std::vector<int> core_beta;
  for (int r = 0; r < n; ++r) {
    auto& lv = levels[r];
    std::sort(lv.begin(), lv.end(), std::greater<>());
    const int c = static_cast<int>(lv.size());
    std::vector<int> parts;
    for (int i = 0; i < c; ++i) parts.push_back(lv[i] - (c - 1 - i));
    out.quotient.push_back(Partition::from_unsorted(std::move(parts)));
    for (int j = 0; j < c; ++j) core_beta.push_back(r + n * j);
  }
  out.core = from_beta(std::move(core_beta));
  return out;
}

Partition from_core_quotient(const CoreQuotient& cq, int n) {
  if (n < 2) throw Error("from_core_quotient needs n >= 2");
  if (static_cast<int>(cq.quotient.size()) != n) throw Error("quotient must have n components");
  int longest = 0;
  for (const auto& p : cq.quotient) longest = std::max(longest, p.length());
  // Enough beads that every runner carries at least `longest` of them.
  const int beads = beads_for(cq.core.length(), n) + n * longest;
  std::vector<int> count(n, 0);
  for (int i = 1; i <= beads; ++i) ++count[(cq.core.part(i) + (beads - i)) % n];
  std::vector<int> beta;
  for (int r = 0; r < n; ++r) {
    const int c = count[r];
    if (c < cq.quotient[r].length()) throw Error("inconsistent core/quotient");
    for (int i = 1; i <= c; ++i) beta.push_back(r + n * (cq.quotient[r].part(i) + c - i));
  }
  return from_beta(std::move(beta));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
  if (d < 0) return {};
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(d);
  if (it != memo.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(d, d, cur, out);
  memo.emplace(d, out);
  return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  int a = 0, b = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 1; i <= len; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

}  // namespace fockbridge
