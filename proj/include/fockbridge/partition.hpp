#pragma once

// Partitions, skew shapes and the combinatorics built on them.

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fockbridge/scalar.hpp"

namespace fockbridge {

/// A cell (row, col) of a Young diagram, both 1-based.
struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class Partition {
 public:
  Partition() = default;
  /// Throws Error unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// Sorts and drops zero parts.
  static Partition from_unsorted(std::vector<int> parts);
  /// Parses "[3,1,1]" or "[]".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part, 1-based; zero beyond the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  int multiplicity(int k) const;

  Partition conjugate() const;
  bool contains(const Partition& inner) const;
  bool contains(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= part(c.row); }
  /// Removes one part equal to k; throws if none is present.
  Partition without_part(int k) const;
  Partition with_part(int k) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

class SkewShape {
 public:
  /// Throws Error when inner is not contained in outer.
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  std::vector<Cell> cells() const;
  bool is_horizontal_strip() const;
  std::string to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

 private:
  Partition outer_;
  Partition inner_;
};

mpz_class z_value(const Partition& lambda);
/// z_lambda = prod_i i^{m_i} m_i! as a Scalar.
Scalar z_of(const Partition& lambda);

/// All mu containing lambda with mu/lambda a horizontal strip of size k,
/// in reverse-lexicographic order.
std::vector<Partition> horizontal_strips(const Partition& lambda, int k);
/// All mu inside lambda with lambda/mu a horizontal strip of size k,
/// in reverse-lexicographic order.
std::vector<Partition> horizontal_strips_below(const Partition& lambda, int k);

/// (arm, leg) of a cell of lambda; throws Error if the cell is outside.
std::pair<int, int> arm_leg(const Partition& lambda, Cell s);

struct CoreQuotient {
  Partition core;
  std::vector<Partition> quotient;
  friend bool operator==(const CoreQuotient&, const CoreQuotient&) = default;
};

/// Abacus decomposition.  Beta numbers are lambda_i + (N - i) with N the
/// least multiple of n that is >= length(lambda); runner r holds the beta
/// numbers congruent to r mod n and gives quotient component r.
CoreQuotient core_quotient(const Partition& lambda, int n);
Partition from_core_quotient(const CoreQuotient& cq, int n);

/// Partitions of d in reverse-lexicographic order.
std::vector<Partition> partitions_of(int d);

/// Dominance order on partitions of equal size.
bool dominates(const Partition& lambda, const Partition& mu);

}  // namespace fockbridge
