#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "omni/partition.hpp"
#include "omni/rates.hpp"

using namespace omni;
using namespace omni::test;

TEST_CASE("subset sums are exact") {
  const RateVector rv = rates({rat(0), rat(1, 2), rat(2), rat(5, 2), rat(1, 2)});
  CHECK(rv.subset_sum(sub({1, 2, 3, 4, 5})) == rat(11, 2));
  CHECK(rv.subset_sum(Subset{}) == rat(0));

  const RateVector mid = rates({rat(-13, 4), rat(-13, 4), rat(2), rat(7, 4), rat(-13, 4)});
  CHECK(mid.subset_sum(sub({4, 5})) == rat(-3, 2));  // 7/4 - 13/4
  CHECK(mid.subset_sum(sub({3, 4})) == rat(15, 4));  // 2 + 7/4
  CHECK(mid.subset_sum(Subset{}) == rat(0));
}

TEST_CASE("subset sum rejects members outside the vector") {
  const RateVector rv = rates({rat(1), rat(2)});
  CHECK_THROWS_AS((void)rv.subset_sum(sub({3})), std::invalid_argument);
}

TEST_CASE("refines: block containment") {
  const GroundSet g(5);
  CHECK(refines(part({{1}, {2}, {3, 4}, {5}}), part({{1, 3, 4}, {2}, {5}})));
  CHECK(refines(Partition::singletons(g), part({{1, 3, 4}, {2}, {5}})));
  CHECK(refines(Partition::singletons(g), Partition::whole(g)));
  CHECK_FALSE(refines(Partition::whole(g), Partition::singletons(g)));
  CHECK_FALSE(refines(part({{1, 2}, {3, 4, 5}}), part({{1, 3, 4}, {2}, {5}})));
  CHECK_THROWS_AS(refines(Partition::singletons(GroundSet(3)), Partition::singletons(g)),
                  std::invalid_argument);
}

TEST_CASE("merge_blocks fuses exactly the named blocks") {
  const Partition p = part({{3, 4}, {2}, {5}, {1}});
  CHECK(merge_blocks(p, {sub({3, 4}), sub({1})}) == part({{1, 3, 4}, {2}, {5}}));
  CHECK(merge_blocks(p, {sub({2})}) == p);

  const Partition pair = part({{1}, {2}});
  CHECK(merge_blocks(pair, {sub({1}), sub({2})}) == part({{1, 2}}));

  CHECK_THROWS_AS(merge_blocks(p, {sub({3})}), std::invalid_argument);  // not a block
  CHECK_THROWS_AS(merge_blocks(p, {}), std::invalid_argument);
}

TEST_CASE("partitions reject empty and overlapping blocks") {
  CHECK_THROWS_AS(Partition::of({}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::of({sub({1}), Subset{}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::of({sub({1, 2}), sub({2, 3})}), std::invalid_argument);
}

TEST_CASE("canonical order makes equality structural") {
  CHECK(part({{5}, {2}, {1, 3, 4}}) == part({{1, 3, 4}, {2}, {5}}));
  CHECK(part({{1, 3, 4}, {2}, {5}}).blocks()[0] == sub({1, 3, 4}));
  CHECK(part({{1, 3, 4}, {2}, {5}}).blocks()[2] == sub({5}));
}

TEST_CASE("merge_blocks always yields a valid partition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Partition p = random_partition(rng, n);
    std::vector<Subset> to_merge;
    for (Subset b : p.blocks()) {
      if (rng() % 2 == 0) to_merge.push_back(b);
    }
    if (to_merge.empty()) to_merge.push_back(p.blocks()[0]);
    const Partition merged = merge_blocks(p, to_merge);
    CHECK(merged.union_mask() == p.union_mask());
    CHECK(merged.size() == p.size() - to_merge.size() + 1);
    CHECK(refines(p, merged));
  }
}

TEST_CASE("refines is a partial order on random partitions") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // n <= 6
    const Partition a = random_partition(rng, n);
    const Partition b = random_partition(rng, n);
    const Partition c = random_partition(rng, n);
    CHECK(refines(a, a));
    if (refines(a, b) && refines(b, a)) CHECK(a == b);
    if (refines(a, b) && refines(b, c)) CHECK(refines(a, c));
  }
}
