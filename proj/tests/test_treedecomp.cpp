#include "doctest.h"

#include "fatgraph/oracle.hpp"
#include "fatgraph/treedecomp.hpp"
#include "helpers.hpp"

using namespace fatgraph;
using namespace fatgraph::testing;

namespace {

ContractedGraph unit_weights(const IntersectionGraph& g) {
  std::vector<std::vector<int>> singletons;
  for (int v = 0; v < g.n; ++v) singletons.push_back({v});
  return contract(g, singletons, WeightFunction::unit());
}

}  // namespace

TEST_CASE("separator recursion decomposition on a path") {
  IntersectionGraph path = IntersectionGraph::from_edges(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  ContractedGraph gp = unit_weights(path);
  // Hand-rolled separator: the middle vertex of the subset.
  SeparatorCallback middle = [](const std::vector<int>& sub) {
    return std::vector<int>{sub[sub.size() / 2]};
  };
  WeightedTreeDecomposition wtd = decompose_by_separator(gp, middle, Rational(2));
  CHECK(validate_decomposition(wtd, gp).empty());
  CHECK(wtd.weighted_width <= 6);  // separators stack along the recursion

  WeightedTreeDecomposition single = decompose_by_separator(gp, middle, Rational(100));
  CHECK(single.node_count() == 1);
  CHECK(validate_decomposition(single, gp).empty());
}

TEST_CASE("blowup of contracted graphs") {
  WeightFunction unit = WeightFunction::unit();
  IntersectionGraph path = IntersectionGraph::from_edges(3, {{0, 1}, {1, 2}});
  ContractedGraph gp = contract(path, {{0}, {1}, {2}}, unit);
  std::vector<std::vector<int>> cliques;
  IntersectionGraph h = blowup(gp, &cliques);
  CHECK(h.n == 3);
  CHECK(h.adj == path.adj);  // weights 1: isomorphic copy

  // Single node of weight 3 -> K3.
  ContractedGraph one;
  one.graph.n = 1;
  one.graph.adj.assign(1, {});
  one.class_sizes = {7};
  one.node_weights = {Rational(3)};
  IntersectionGraph k3 = blowup(one);
  CHECK(k3.n == 3);
  CHECK(k3.edge_count() == 3);

  // Edge with weights 2,2 -> K4.
  ContractedGraph edge;
  edge.graph = IntersectionGraph::from_edges(2, {{0, 1}});
  edge.class_sizes = {3, 3};
  edge.node_weights = {Rational(2), Rational(2)};
  IntersectionGraph k4 = blowup(edge);
  CHECK(k4.n == 4);
  CHECK(k4.edge_count() == 6);
}

TEST_CASE("min-fill elimination yields valid decompositions") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    IntersectionGraph g = random_graph(3 + static_cast<int>(seed % 10), 0.35, 900 + seed);
    ContractedGraph gp = unit_weights(g);
    WeightedTreeDecomposition wtd = decomposition_from_elimination(g, min_fill_order(g));
    CHECK(validate_decomposition(wtd, gp).empty());
  }
}

TEST_CASE("blowup decomposition: back-mapping stays valid and tight") {
  // Unit-weight tree: weighted width at most 2.
  IntersectionGraph tree = IntersectionGraph::from_edges(
      7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  ContractedGraph gp = unit_weights(tree);
  WeightedTreeDecomposition wtd = decompose_by_blowup(gp);
  CHECK(validate_decomposition(wtd, gp).empty());
  CHECK(wtd.weighted_width <= 2);

  for (uint64_t seed = 0; seed < 30; ++seed) {
    IntersectionGraph g = random_graph(4 + static_cast<int>(seed % 9), 0.3, 1700 + seed);
    KappaPartition part = build_kappa_partition(g, WeightFunction::log2p1());
    WeightedTreeDecomposition wtd2 = decompose_by_blowup(part.contracted);
    CHECK(validate_decomposition(wtd2, part.contracted).empty());

    // Width relation against the blowup decomposition.
    IntersectionGraph h = blowup(part.contracted);
    WeightedTreeDecomposition tdh = decomposition_from_elimination(h, min_fill_order(h));
    CHECK(wtd2.weighted_width <= tdh.weighted_width);
  }
}

TEST_CASE("geometric separator decomposition is valid and within the width gate") {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    GeneratorConfig cfg;
    cfg.n = 60;
    cfg.region_side = 10;
    cfg.seed = 2400 + seed;
    ObjectSet objs = gen_instance(cfg);
    IntersectionGraph g = build_intersection_graph(objs);
    KappaPartition part = build_kappa_partition(g, WeightFunction::log2p1());
    Rational base(4.0 * std::sqrt(static_cast<double>(g.n)));
    WeightedTreeDecomposition wtd = decompose_by_separator(
        part.contracted, geometric_separator_callback(part, objs), base);
    auto violations = validate_decomposition(wtd, part.contracted);
    for (const auto& v : violations) FAIL_CHECK(v);
  }
}

TEST_CASE("traditional decomposition: grammar, coverage, contiguity") {
  // One class of k vertices: k introduces then k forgets.
  IntersectionGraph k4 = IntersectionGraph::from_edges(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  KappaPartition part = build_kappa_partition(k4, WeightFunction::log2p1());
  REQUIRE(part.class_count() == 1);
  WeightedTreeDecomposition wtd;
  wtd.bags = {{0}};
  wtd.weighted_width = part.contracted.node_weights[0];
  TraditionalTreeDecomposition trad = to_traditional(wtd, part);
  CHECK(validate_traditional(trad, k4, &part).empty());
  int introduces = 0, forgets = 0, joins = 0;
  for (const auto& nd : trad.nodes) {
    introduces += nd.kind == NodeKind::Introduce;
    forgets += nd.kind == NodeKind::Forget;
    joins += nd.kind == NodeKind::Join;
  }
  CHECK(introduces == 4);
  CHECK(forgets == 4);
  CHECK(joins == 0);

  for (uint64_t seed = 0; seed < 25; ++seed) {
    IntersectionGraph g = random_graph(5 + static_cast<int>(seed % 8), 0.3, 2600 + seed);
    KappaPartition p = build_kappa_partition(g, WeightFunction::log2p1());
    WeightedTreeDecomposition w = decompose_by_blowup(p.contracted);
    TraditionalTreeDecomposition t = to_traditional(w, p);
    auto violations = validate_traditional(t, g, &p);
    for (const auto& v : violations) FAIL_CHECK(v);
    // Solver semantics: bag class-weights stay within the weighted width.
    CHECK(traditional_weighted_width(t, p) <= w.weighted_width);
  }
}

TEST_CASE("validator flags broken decompositions") {
  IntersectionGraph path = IntersectionGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  ContractedGraph gp = unit_weights(path);
  WeightedTreeDecomposition good;
  good.bags = {{0, 1}, {1, 2}, {2, 3}};
  good.tree_edges = {{0, 1}, {1, 2}};
  good.weighted_width = 2;
  CHECK(validate_decomposition(good, gp).empty());

  WeightedTreeDecomposition missing = good;
  missing.bags[1] = {1};  // drops edge (1,2) and vertex 2's bag stays ok
  CHECK_FALSE(validate_decomposition(missing, gp).empty());

  WeightedTreeDecomposition torn = good;
  torn.bags[1] = {0, 2};  // vertex 1's occurrence set becomes disconnected
  CHECK_FALSE(validate_decomposition(torn, gp).empty());

  WeightedTreeDecomposition wrong_width = good;
  wrong_width.weighted_width = 17;
  CHECK_FALSE(validate_decomposition(wrong_width, gp).empty());
}
