#include "doctest.h"

#include <functional>
#include <random>

#include "fatgraph/rankbased.hpp"

using namespace fatgraph;

namespace {

std::vector<SetPartition> all_partitions(unsigned u) {
  std::vector<SetPartition> out;
  std::vector<int> block_of(u, 0);
  std::function<void(unsigned, int)> gen = [&](unsigned pos, int max_label) {
    if (pos == u) {
      out.push_back(canonical_partition(block_of));
      return;
    }
    for (int b = 0; b <= max_label; ++b) {
      block_of[pos] = b;
      gen(pos + 1, std::max(max_label, b + 1));
    }
  };
  gen(0, 0);
  return out;
}

long best_weight(const std::vector<std::pair<SetPartition, long>>& entries,
                 const SetPartition& q) {
  long best = -1;
  for (const auto& [p, w] : entries)
    if (join(p, q).is_top() && (best < 0 || w < best)) best = w;
  return best;
}

}  // namespace

TEST_CASE("partition basics") {
  SetPartition bot = SetPartition::bottom(3);
  CHECK(bot.block_count() == 3);
  SetPartition top = SetPartition::top(3);
  CHECK(top.is_top());
  CHECK(canonical_partition({2, 2, 0}) == canonical_partition({1, 1, 0}));
  CHECK(join(bot, top).is_top());
}

TEST_CASE("join identities and chaining") {
  // {1,2}{3} join {1}{2,3} = {1,2,3}
  SetPartition p = canonical_partition({0, 0, 1});
  SetPartition q = canonical_partition({0, 1, 1});
  CHECK(join(p, q).is_top());
  // bottom is the identity of the join.
  for (const SetPartition& r : all_partitions(4))
    CHECK(join(r, SetPartition::bottom(4)) == r);
  CHECK_THROWS_AS(join(SetPartition::bottom(2), SetPartition::bottom(3)),
                  std::invalid_argument);
}

TEST_CASE("join is commutative and associative (exhaustive u <= 4, sampled u = 5)") {
  for (unsigned u : {2u, 3u, 4u}) {
    auto all = all_partitions(u);
    for (const auto& a : all)
      for (const auto& b : all) {
        CHECK(join(a, b) == join(b, a));
        for (const auto& c : all)
          CHECK(join(join(a, b), c) == join(a, join(b, c)));
      }
  }
  auto all5 = all_partitions(5);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 500; ++it) {
    const auto& a = all5[rng() % all5.size()];
    const auto& b = all5[rng() % all5.size()];
    const auto& c = all5[rng() % all5.size()];
    CHECK(join(a, b) == join(b, a));
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
  }
}

TEST_CASE("glue, insert, project") {
  SetPartition ab = canonical_partition({0, 1});
  CHECK(glue(ab, 0, 1).is_top());

  // insert then project of an isolated element restores the original.
  for (const SetPartition& p : all_partitions(4)) {
    for (unsigned pos = 0; pos <= 4; ++pos) {
      SetPartition grown = insert_element(p, pos);
      auto back = project(grown, pos, false);
      REQUIRE(back.has_value());
      CHECK(*back == p);
    }
  }

  // Connectivity-requiring projection refuses stranded singletons.
  SetPartition two = canonical_partition({0, 1});
  CHECK_FALSE(project(two, 0, true).has_value());
  SetPartition joined = canonical_partition({0, 0});
  CHECK(project(joined, 0, true).has_value());
  SetPartition alone = canonical_partition({0});
  CHECK(project(alone, 0, true).has_value());  // nothing else to connect to
}

TEST_CASE("reduce keeps exactly the entries every completion needs") {
  // A = {(top, 5), (bottom, 3)} over u = 2: q = top needs bottom's weight 3,
  // q = bottom needs top's weight 5, so both survive.
  WeightedPartitionSet a;
  a.universe = {0, 1};
  a.insert_min(SetPartition::top(2), 5);
  a.insert_min(SetPartition::bottom(2), 3);
  WeightedPartitionSet r = reduce(a);
  CHECK(r.entries.size() == 2);

  // Duplicate partitions keep the minimum weight.
  WeightedPartitionSet dup;
  dup.universe = {0, 1, 2};
  dup.insert_min(canonical_partition({0, 0, 1}), 7);
  dup.insert_min(canonical_partition({0, 0, 1}), 4);
  CHECK(dup.entries.size() == 1);
  CHECK(dup.entries[0].second == 4);
}

TEST_CASE("representation property on random sets, u <= 6") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 500; ++it) {
    unsigned u = 2 + rng() % 5;
    WeightedPartitionSet a;
    for (unsigned e = 0; e < u; ++e) a.universe.push_back(static_cast<int>(e));
    int count = 1 + static_cast<int>(rng() % 14);
    for (int c = 0; c < count; ++c) {
      std::vector<int> block_of(u);
      for (unsigned e = 0; e < u; ++e) block_of[e] = static_cast<int>(rng() % u);
      a.insert_min(canonical_partition(block_of), static_cast<long>(rng() % 40));
    }
    WeightedPartitionSet r = reduce(a);
    CHECK(r.entries.size() <= (size_t{1} << (u - 1)));
    for (const SetPartition& q : all_partitions(u))
      CHECK(best_weight(a.entries, q) == best_weight(r.entries, q));
    // Idempotence.
    WeightedPartitionSet twice = reduce(r);
    CHECK(twice.entries.size() == r.entries.size());
    for (size_t i = 0; i < r.entries.size(); ++i)
      CHECK(twice.entries[i].first == r.entries[i].first);
  }
}

TEST_CASE("reduce rejects the empty universe") {
  WeightedPartitionSet empty;
  CHECK_THROWS_AS(reduce(empty), std::invalid_argument);
}
