#include "doctest.h"

#include "fatgraph/contraction.hpp"
#include "fatgraph/oracle.hpp"
#include "helpers.hpp"

using namespace fatgraph;
using namespace fatgraph::testing;

TEST_CASE("greedy maximal independent set") {
  IntersectionGraph path = IntersectionGraph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(greedy_mis(path) == std::vector<int>{0, 2});

  IntersectionGraph k5 = IntersectionGraph::from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(greedy_mis(k5).size() == 1);

  IntersectionGraph empty = IntersectionGraph::from_edges(4, {});
  CHECK(greedy_mis(empty).size() == 4);
}

TEST_CASE("mis is independent and maximal on random graphs") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    IntersectionGraph g = random_graph(20, 0.2, 800 + seed);
    std::vector<int> mis = greedy_mis(g);
    std::vector<char> in(g.n, 0);
    for (int v : mis) in[v] = 1;
    for (int v : mis)
      for (int w : g.adj[v]) CHECK_FALSE(in[w]);
    for (int v = 0; v < g.n; ++v) {
      if (in[v]) continue;
      bool dominated = false;
      for (int w : g.adj[v]) dominated |= in[w];
      CHECK(dominated);
    }
  }
}

TEST_CASE("kappa partition on tiny graphs") {
  WeightFunction gamma = WeightFunction::log2p1();
  IntersectionGraph k5 = IntersectionGraph::from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  KappaPartition p5 = build_kappa_partition(k5, gamma);
  CHECK(p5.class_count() == 1);
  CHECK(p5.clique_covers[0].size() == 1);
  CHECK(p5.kappa_hat == 1);
  CHECK(p5.delta_hat == 0);

  IntersectionGraph path = IntersectionGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  KappaPartition pp = build_kappa_partition(path, gamma);
  REQUIRE(pp.class_count() == 2);
  CHECK(pp.classes[0] == std::vector<int>{0, 1});
  CHECK(pp.classes[1] == std::vector<int>{2, 3});
  CHECK(pp.contracted.graph.edge_count() == 1);
}

TEST_CASE("kappa partition classes are connected, covered by cliques") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    GeneratorConfig cfg;
    cfg.n = 50;
    cfg.region_side = 8;
    cfg.seed = 700 + seed;
    ObjectSet objs = gen_instance(cfg);
    IntersectionGraph g = build_intersection_graph(objs);
    KappaPartition part = build_kappa_partition(g, WeightFunction::log2p1());

    std::vector<int> assigned(g.n, 0);
    for (int c = 0; c < part.class_count(); ++c) {
      for (int v : part.classes[c]) {
        ++assigned[v];
        CHECK(part.class_of[v] == c);
      }
      // Connectivity by flood fill inside the class.
      std::vector<char> in(g.n, 0), seen(g.n, 0);
      for (int v : part.classes[c]) in[v] = 1;
      std::vector<int> stack{part.classes[c][0]};
      seen[part.classes[c][0]] = 1;
      int reached = 0;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : g.adj[v])
          if (in[w] && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      CHECK(reached == static_cast<int>(part.classes[c].size()));

      // Cover cliques are complete and cover the class exactly.
      std::vector<int> covered;
      for (const auto& clique : part.clique_covers[c]) {
        for (size_t i = 0; i < clique.size(); ++i)
          for (size_t j = i + 1; j < clique.size(); ++j)
            CHECK(g.adjacent(clique[i], clique[j]));
        covered.insert(covered.end(), clique.begin(), clique.end());
      }
      std::sort(covered.begin(), covered.end());
      CHECK(covered == part.classes[c]);
    }
    for (int v = 0; v < g.n; ++v) CHECK(assigned[v] == 1);
    CHECK(part.kappa_hat >= 1);
    CHECK(part.delta_hat == part.contracted.max_degree());
  }
}

TEST_CASE("contraction of explicit partitions") {
  WeightFunction gamma = WeightFunction::log2p1();
  IntersectionGraph path = IntersectionGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});

  ContractedGraph iso = contract(path, {{0}, {1}, {2}, {3}}, gamma);
  CHECK(iso.graph.edge_count() == 3);
  CHECK(iso.node_weights[0] == gamma(1));

  ContractedGraph all = contract(path, {{0, 1, 2, 3}}, gamma);
  CHECK(all.graph.n == 1);
  CHECK(all.graph.edge_count() == 0);

  ContractedGraph halves = contract(path, {{0, 1}, {2, 3}}, gamma);
  CHECK(halves.graph.edge_count() == 1);

  CHECK_THROWS_AS(contract(path, {{0, 1}, {1, 2, 3}}, gamma), std::invalid_argument);
  CHECK_THROWS_AS(contract(path, {{0, 1}}, gamma), std::invalid_argument);
}

TEST_CASE("distance-r class neighborhoods via bfs") {
  WeightFunction gamma = WeightFunction::unit();
  IntersectionGraph path = IntersectionGraph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                                             {4, 5}, {5, 6}, {6, 7}});
  ContractedGraph cg = contract(path, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}, gamma);
  CHECK(classes_within_distance(cg, 0, 1) == std::vector<int>{0, 1});
  CHECK(classes_within_distance(cg, 0, 2) == std::vector<int>{0, 1, 2});
  CHECK(classes_within_distance(cg, 3, 10) == std::vector<int>{0, 1, 2, 3});
}
