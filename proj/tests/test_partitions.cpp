#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "support.hpp"

using namespace fbtest;

namespace {

// Cell-level horizontal strip predicate, independent of the enumerator.
bool strip_by_cells(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  std::set<int> cols;
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c)
      if (!cols.insert(c).second) return false;
  return true;
}

std::vector<Partition> all_up_to(int d) {
  std::vector<Partition> out;
  for (int n = 0; n <= d; ++n)
    for (const auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

// Naive count of partitions of n with parts at most m.
long count_partitions(int n, int m) {
  if (n == 0) return 1;
  long total = 0;
  for (int k = std::min(n, m); k >= 1; --k) total += count_partitions(n - k, k);
  return total;
}

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(P("[3,1,1]").parts() == std::vector<int>{3, 1, 1});
  CHECK(P("[]").empty());
  CHECK(P(" [ 2 , 1 ] ") == Partition{2, 1});
  CHECK(Partition{3, 1, 1}.to_string() == "[3,1,1]");
  CHECK(Partition().to_string() == "[]");
  CHECK_THROWS_AS(P("[1,2]"), Error);
  CHECK_THROWS_AS(P("[2,0]"), Error);
  CHECK_THROWS_AS(P("3,1"), ParseError);
  CHECK_THROWS_AS(P("[a]"), ParseError);
  CHECK(Partition::from_unsorted({1, 0, 3, 2}) == Partition{3, 2, 1});
}

TEST_CASE("z_lambda") {
  CHECK(z_of(Partition()) == Scalar(1));
  CHECK(z_of(Partition{2, 1}) == Scalar(2));
  CHECK(z_of(Partition{2, 2}) == Scalar(8));
  CHECK(z_of(Partition{1, 1, 1}) == Scalar(6));
  CHECK(z_of(Partition{3, 3, 1}) == Scalar(18));
}

TEST_CASE("sum of 1/z over partitions of n is 1") {
  for (int n = 0; n <= 9; ++n) {
    Scalar total;
    for (const auto& p : partitions_of(n)) total += z_of(p).inverse();
    CHECK(total == Scalar(1));
  }
}

TEST_CASE("horizontal strips examples") {
  CHECK(horizontal_strips(Partition(), 3) == std::vector<Partition>{Partition{3}});
  CHECK(horizontal_strips(Partition{1}, 2) == std::vector<Partition>{Partition{3}, Partition{2, 1}});
  CHECK(horizontal_strips(Partition{2, 2}, 1) == std::vector<Partition>{Partition{3, 2}, Partition{2, 2, 1}});
  CHECK(horizontal_strips_below(Partition{2, 1}, 1) == std::vector<Partition>{Partition{2}, Partition{1, 1}});
  CHECK(horizontal_strips_below(Partition{1, 1}, 2).empty());
}

TEST_CASE("horizontal strips agree with a cell-level predicate") {
  for (const auto& lambda : all_up_to(6)) {
    for (int k = 1; k <= 4; ++k) {
      const auto strips = horizontal_strips(lambda, k);
      std::set<Partition> got(strips.begin(), strips.end());
      CHECK(got.size() == strips.size());
      std::set<Partition> expected;
      for (const auto& mu : partitions_of(lambda.size() + k))
        if (strip_by_cells(mu, lambda)) expected.insert(mu);
      CHECK(got == expected);
      for (const auto& mu : strips) {
        CHECK(SkewShape(mu, lambda).is_horizontal_strip());
        const auto below = horizontal_strips_below(mu, k);
        CHECK(std::find(below.begin(), below.end(), lambda) != below.end());
      }
    }
  }
}

TEST_CASE("arm and leg") {
  CHECK(arm_leg(Partition{1}, {1, 1}) == std::pair{0, 0});
  CHECK(arm_leg(Partition{3, 2}, {1, 1}) == std::pair{2, 1});
  CHECK(arm_leg(Partition{2}, {1, 1}) == std::pair{1, 0});
  CHECK_THROWS_AS(arm_leg(Partition{2}, {2, 1}), Error);
}

TEST_CASE("conjugation is an involution") {
  CHECK(Partition{3, 2}.conjugate() == Partition{2, 2, 1});
  for (const auto& p : all_up_to(10)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("skew shapes") {
  const SkewShape s(Partition{3, 1}, Partition{1});
  CHECK(s.size() == 3);
  CHECK(s.cells() == std::vector<Cell>{{1, 2}, {1, 3}, {2, 1}});
  CHECK(s.is_horizontal_strip());
  CHECK_FALSE(SkewShape(Partition{1, 1}, Partition()).is_horizontal_strip());
  CHECK_THROWS_AS(SkewShape(Partition{1}, Partition{2}), Error);
  CHECK(s.to_string() == "[3,1]/[1]");
}

TEST_CASE("core and quotient examples") {
  const auto a = core_quotient(Partition{2, 1}, 2);
  CHECK(a.core == Partition{2, 1});
  CHECK(a.quotient == std::vector<Partition>{Partition(), Partition()});
  const auto b = core_quotient(Partition{2}, 2);
  CHECK(b.core == Partition());
  CHECK(b.quotient == std::vector<Partition>{Partition(), Partition{1}});
  const auto c = core_quotient(Partition{1, 1}, 2);
  CHECK(c.core == Partition());
  CHECK(c.quotient == std::vector<Partition>{Partition{1}, Partition()});
  CHECK_THROWS_AS(core_quotient(Partition{1}, 1), Error);
}

TEST_CASE("core and quotient form a bijection") {
  for (int n : {2, 3, 4}) {
    std::set<std::pair<Partition, std::vector<Partition>>> seen;
    for (const auto& lambda : all_up_to(10)) {
      const auto cq = core_quotient(lambda, n);
      int quotient_size = 0;
      for (const auto& p : cq.quotient) quotient_size += p.size();
      CHECK(cq.quotient.size() == static_cast<std::size_t>(n));
      CHECK(lambda.size() == cq.core.size() + n * quotient_size);
      CHECK(from_core_quotient(cq, n) == lambda);
      CHECK(seen.insert({cq.core, cq.quotient}).second);
      // The core is its own core.
      const auto again = core_quotient(cq.core, n);
      CHECK(again.core == cq.core);
    }
  }
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
  CHECK(partitions_of(3) == std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
  CHECK(partitions_of(8).size() == 22);
  for (int n = 0; n <= 12; ++n) {
    const auto ps = partitions_of(n);
    CHECK(static_cast<long>(ps.size()) == count_partitions(n, n));
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i + 1] < ps[i]);
    for (const auto& p : ps) CHECK(p.size() == n);
  }
}

TEST_CASE("dominance") {
  CHECK(dominates(Partition{3}, Partition{2, 1}));
  CHECK(dominates(Partition{2, 1}, Partition{1, 1, 1}));
  CHECK_FALSE(dominates(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
  CHECK_FALSE(dominates(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
}
