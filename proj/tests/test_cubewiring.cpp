#include "doctest.h"

#include <random>
#include <set>

#include "fatgraph/cubewiring.hpp"
#include "fatgraph/errors.hpp"

using namespace fatgraph;

namespace {

// Structural check for fragments: unit steps, vertex-disjoint, heights from
// 1 to top.
void check_fragment(const WireFragment& frag) {
  std::set<GridPoint> seen;
  for (const auto& path : frag.paths) {
    REQUIRE(!path.empty());
    CHECK(path.front().back() == 1);
    CHECK(path.back().back() == frag.top);
    for (size_t s = 0; s < path.size(); ++s) {
      CHECK(seen.insert(path[s]).second);
      CHECK(path[s].back() >= 1);
      CHECK(path[s].back() <= frag.top);
      if (s > 0) {
        long dist = 0;
        for (size_t a = 0; a < path[s].size(); ++a)
          dist += std::abs(path[s][a] - path[s - 1][a]);
        CHECK(dist == 1);
      }
    }
  }
}

std::vector<GridPoint> box_points(const std::vector<int>& n) {
  std::vector<GridPoint> pts;
  GridPoint cursor(n.size(), 1);
  while (true) {
    pts.push_back(cursor);
    size_t a = 0;
    while (a < n.size() && cursor[a] == n[a]) cursor[a++] = 1;
    if (a == n.size()) break;
    ++cursor[a];
  }
  return pts;
}

WiringInstance perm_instance(unsigned d, std::vector<int> n, uint64_t seed) {
  WiringInstance inst;
  inst.d = d;
  inst.n = std::move(n);
  std::vector<GridPoint> pts = box_points(inst.n);
  std::vector<GridPoint> dst = pts;
  std::mt19937_64 rng(seed);
  for (size_t i = dst.size(); i > 1; --i) std::swap(dst[i - 1], dst[rng() % i]);
  for (size_t i = 0; i < pts.size(); ++i) inst.matching.emplace_back(pts[i], dst[i]);
  return inst;
}

}  // namespace

TEST_CASE("local movement") {
  // P = Q: three vertical unit steps per wire.
  std::vector<std::pair<GridPoint, GridPoint>> still{{{1, 1}, {1, 1}}, {{5, 2}, {5, 2}}};
  WireFragment frag = local_movement(still, 3);
  check_fragment(frag);
  for (const auto& path : frag.paths) CHECK(path.size() == 3);

  // Same 3-cell rerouting.
  WireFragment move = local_movement({{{1, 1}, {2, 2}}}, 3);
  check_fragment(move);
  CHECK(move.top == 3);
  CHECK(move.paths[0].back() == GridPoint{2, 2, 3});

  // Random quasi-3-spaced sets in d = 3: pick one point per cell.
  std::mt19937_64 rng(11);
  std::vector<std::pair<GridPoint, GridPoint>> pairs;
  for (int cx = 0; cx < 4; ++cx)
    for (int cy = 0; cy < 4; ++cy) {
      GridPoint p{3 * cx + 1 + static_cast<int>(rng() % 3),
                  3 * cy + 1 + static_cast<int>(rng() % 3)};
      GridPoint q{3 * cx + 1 + static_cast<int>(rng() % 3),
                  3 * cy + 1 + static_cast<int>(rng() % 3)};
      pairs.emplace_back(p, q);
    }
  check_fragment(local_movement(pairs, 3));

  CHECK_THROWS_AS(local_movement({{{1, 1}, {4, 1}}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(local_movement({{{1, 1}, {2, 1}}, {{2, 2}, {1, 2}}}, 3),
                  std::invalid_argument);
}

TEST_CASE("global movement") {
  // Single point (1,1), shift k*n1 = 2, box size 2: endpoint (3,1) at height 4.
  WireFragment frag = global_movement({{1, 1}}, 0, 2, 2);
  check_fragment(frag);
  CHECK(frag.top == 4);
  CHECK(frag.paths[0].back() == GridPoint{3, 1, 4});

  // Zero shift: pure vertical lift.
  WireFragment lift = global_movement({{1, 1}, {2, 2}}, 0, 0, 2);
  check_fragment(lift);
  for (const auto& path : lift.paths)
    CHECK(path.front()[0] == path.back()[0]);

  // Full box translated, d = 3.
  std::vector<GridPoint> pts = box_points({4, 4});
  WireFragment full = global_movement(pts, 0, 8, 4);
  check_fragment(full);
  CHECK(full.top == 6);
  for (size_t i = 0; i < pts.size(); ++i) {
    CHECK(full.paths[i].back()[0] == pts[i][0] + 8);
    CHECK(full.paths[i].back()[1] == pts[i][1]);
  }
}

TEST_CASE("compression and expansion") {
  // d = 2 base case: P = {2,4}, k = 2 -> cells {0,1} within n1+2 layers.
  WireFragment frag = compress({{2}, {4}}, 2, 0);
  check_fragment(frag);
  CHECK(frag.top <= 4);  // 2 cells + 2
  CHECK(frag.paths[0].back()[0] == 0);
  CHECK(frag.paths[1].back()[0] == 1);

  // k = 1 with 1-based cells: identity lift.
  WireFragment ident = compress({{3, 2}}, 1, 1);
  check_fragment(ident);
  CHECK(ident.paths[0].back() == GridPoint{3, 2, ident.top});

  // Round trip: expanding the compression targets restores the points, d=3.
  std::vector<GridPoint> pts{{3, 6}, {6, 3}, {9, 9}, {3, 3}};
  WireFragment down = compress(pts, 3, 1);
  check_fragment(down);
  WireFragment up = expand(pts, 3, 1);
  check_fragment(up);
  for (size_t i = 0; i < pts.size(); ++i) {
    GridPoint cell = down.paths[i].back();
    cell.pop_back();
    GridPoint start = up.paths[i].front();
    start.pop_back();
    CHECK(cell == start);
    GridPoint end = up.paths[i].back();
    end.pop_back();
    CHECK(end == pts[i]);
  }

  CHECK_THROWS_AS(compress({{2}, {3}}, 2, 0), std::invalid_argument);  // not 2-spaced
}

TEST_CASE("push pull") {
  // P = Q: identity lexicographic matching.
  std::vector<GridPoint> pq{{1, 1}, {2, 3}, {4, 2}};
  WireFragment same = push_pull(pq, pq, {4, 4});
  check_fragment(same);
  for (size_t i = 0; i < pq.size(); ++i) {
    GridPoint end = same.paths[i].back();
    end.pop_back();
    GridPoint src = same.paths[i].front();
    src.pop_back();
    CHECK(end == src);
  }

  // d = 2: two wires in at most 2n+4 layers.
  WireFragment two = push_pull({{1}, {2}}, {{3}, {4}}, {4});
  check_fragment(two);
  CHECK(two.top <= 12);
  CHECK(two.paths[0].back()[0] == 3);
  CHECK(two.paths[1].back()[0] == 4);

  // Random sets in Box(4,4), d = 3: verified and within 3*n1+2 layers.
  std::mt19937_64 rng(23);
  for (int it = 0; it < 10; ++it) {
    std::vector<GridPoint> all = box_points({4, 4});
    for (size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng() % i]);
    size_t count = 1 + rng() % 10;
    std::vector<GridPoint> P(all.begin(), all.begin() + count);
    for (size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng() % i]);
    std::vector<GridPoint> Q(all.begin(), all.begin() + count);
    WireFragment frag2 = push_pull(P, Q, {4, 4});
    check_fragment(frag2);
    CHECK(frag2.top <= 3 * 4 + 2);
    for (const auto& path : frag2.paths)
      for (const GridPoint& p : path) {
        CHECK(p[0] >= 1);
        CHECK(p[0] <= 24);
        CHECK(p[1] >= 1);
        CHECK(p[1] <= 24);
      }
  }
}

TEST_CASE("wire matching routes identity and swaps") {
  WiringInstance ident;
  ident.d = 3;
  ident.n = {2, 2};
  for (const GridPoint& p : box_points({2, 2})) ident.matching.emplace_back(p, p);
  Wiring w = wire_matching(ident);
  CHECK(verify_wiring(w, ident).empty());

  WiringInstance swap2;
  swap2.d = 3;
  swap2.n = {2, 2};
  swap2.matching = {{{1, 1}, {2, 2}}, {{2, 2}, {1, 1}}};
  Wiring ws = wire_matching(swap2);
  auto violations = verify_wiring(ws, swap2);
  for (const auto& v : violations) FAIL_CHECK(v);
}

TEST_CASE("wire matching on random permutations") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    WiringInstance inst = perm_instance(3, {4, 4}, 40 + seed);
    Wiring w = wire_matching(inst);
    auto violations = verify_wiring(w, inst);
    for (const auto& v : violations) FAIL_CHECK(v);
    double sum_n = 8;
    CHECK(w.height / sum_n < 60.0);  // sanity on the height constant
  }
  // Four dimensions.
  WiringInstance inst4 = perm_instance(4, {2, 2, 2}, 99);
  Wiring w4 = wire_matching(inst4);
  auto violations = verify_wiring(w4, inst4);
  for (const auto& v : violations) FAIL_CHECK(v);
}

TEST_CASE("wiring verifier flags corruption") {
  WiringInstance inst = perm_instance(3, {2, 2}, 7);
  Wiring w = wire_matching(inst);
  REQUIRE(verify_wiring(w, inst).empty());

  Wiring shared = w;
  shared.wires[1].points = shared.wires[0].points;  // duplicate a whole path
  CHECK_FALSE(verify_wiring(shared, inst).empty());

  Wiring wrong_end = w;
  WiringInstance permuted = inst;
  std::swap(permuted.matching[0].second, permuted.matching[1].second);
  CHECK_FALSE(verify_wiring(wrong_end, permuted).empty());

  CHECK_THROWS_AS(
      [] {
        WiringInstance bad;
        bad.d = 2;
        bad.n = {4};
        bad.validate();
      }(),
      unsupported_error);
}
