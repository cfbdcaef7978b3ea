#include "doctest.h"

#include "fatgraph/oracle.hpp"
#include "fatgraph/solvers.hpp"
#include "helpers.hpp"

using namespace fatgraph;
using namespace fatgraph::testing;

namespace {

ProblemInstance make_inst(IntersectionGraph g, Problem p) {
  ProblemInstance inst;
  inst.graph = std::move(g);
  inst.problem = p;
  return inst;
}

IntersectionGraph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return IntersectionGraph::from_edges(n, edges);
}

IntersectionGraph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return IntersectionGraph::from_edges(n, edges);
}

IntersectionGraph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return IntersectionGraph::from_edges(n, edges);
}

IntersectionGraph star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return IntersectionGraph::from_edges(leaves + 1, edges);
}

// Geometric instance small enough for the oracle.
ObjectSet small_instance(uint64_t seed, int n, unsigned d) {
  GeneratorConfig cfg;
  cfg.d = d;
  cfg.n = n;
  cfg.region_side = d == 2 ? 5.0 : 4.0;
  cfg.size_ratio = 1.5;
  cfg.seed = seed;
  return gen_instance(cfg);
}

}  // namespace

TEST_CASE("independent set and vertex cover on named graphs") {
  ProblemInstance k5 = make_inst(complete(5), Problem::IndependentSet);
  CHECK(solve(k5).optimum == 1);
  k5.problem = Problem::VertexCover;
  CHECK(solve(k5).optimum == 4);

  ProblemInstance c5 = make_inst(cycle(5), Problem::IndependentSet);
  CHECK(solve(c5).optimum == 2);
}

TEST_CASE("dominating set on named graphs") {
  ProblemInstance s = make_inst(star(5), Problem::DominatingSet);
  CHECK(solve(s).optimum == 1);

  ProblemInstance c6 = make_inst(cycle(6), Problem::DominatingSet);
  c6.r = 2;
  CHECK(solve(c6).optimum == 2);
  CHECK(brute_force(c6).optimum == 2);
}

TEST_CASE("steiner tree on named graphs") {
  ProblemInstance p3 = make_inst(path(3), Problem::SteinerTree);
  p3.terminals = {0, 2};
  CHECK(solve(p3).optimum == 3);

  ProblemInstance k4 = make_inst(complete(4), Problem::SteinerTree);
  k4.terminals = {0, 3};
  CHECK(solve(k4).optimum == 2);

  // Terminals in different components: infeasible.
  ProblemInstance split = make_inst(IntersectionGraph::from_edges(4, {{0, 1}, {2, 3}}),
                                    Problem::SteinerTree);
  split.terminals = {0, 3};
  CHECK_FALSE(solve(split).feasible);

  // Budget decision.
  ProblemInstance tight = make_inst(path(4), Problem::SteinerTree);
  tight.terminals = {0, 3};
  tight.budget = 3;
  CHECK_FALSE(solve(tight).feasible);
  tight.budget = 4;
  CHECK(solve(tight).feasible);
}

TEST_CASE("induced forest and feedback vertex set on named graphs") {
  ProblemInstance k4 = make_inst(complete(4), Problem::MaxInducedForest);
  CHECK(solve(k4).optimum == 2);
  CHECK(brute_force(k4).optimum == 2);
  k4.problem = Problem::FeedbackVertexSet;
  CHECK(solve(k4).optimum == 2);

  IntersectionGraph tree = IntersectionGraph::from_edges(
      7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  ProblemInstance t = make_inst(tree, Problem::MaxInducedForest);
  CHECK(solve(t).optimum == 7);
  t.problem = Problem::FeedbackVertexSet;
  CHECK(solve(t).optimum == 0);
}

TEST_CASE("connected vertex cover on named graphs") {
  ProblemInstance s = make_inst(star(4), Problem::ConnectedVertexCover);
  CHECK(solve(s).optimum == 1);

  ProblemInstance p4 = make_inst(path(4), Problem::ConnectedVertexCover);
  CHECK(solve(p4).optimum == 2);

  ProblemInstance edgeless = make_inst(IntersectionGraph::from_edges(3, {}),
                                       Problem::ConnectedVertexCover);
  CHECK(solve(edgeless).optimum == 0);

  ProblemInstance split = make_inst(IntersectionGraph::from_edges(4, {{0, 1}, {2, 3}}),
                                    Problem::ConnectedVertexCover);
  CHECK_FALSE(solve(split).feasible);
}

TEST_CASE("solver equals brute force on random geometric instances") {
  std::vector<Problem> problems = {Problem::IndependentSet, Problem::VertexCover,
                                   Problem::DominatingSet, Problem::MaxInducedForest,
                                   Problem::FeedbackVertexSet};
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    unsigned d = seed % 2 ? 2 : 3;
    ObjectSet objs = small_instance(1000 + seed, 6 + static_cast<int>(seed % 9), d);
    IntersectionGraph g = build_intersection_graph(objs);
    for (Problem p : problems) {
      ProblemInstance inst = make_inst(g, p);
      if (p == Problem::DominatingSet) inst.r = 1 + static_cast<int>(seed % 2);
      SolveResult expect = brute_force(inst);
      SolveResult got = solve(inst);
      CHECK(got.optimum == expect.optimum);
      CHECK(got.feasible == expect.feasible);

      // Geometry-backed separator decomposition route.
      SolveOptions gopts;
      gopts.geometry = &objs;
      gopts.use_separator_decomposition = true;
      SolveResult geo = solve(inst, gopts);
      CHECK(geo.optimum == expect.optimum);
    }
  }
}

TEST_CASE("connectivity solvers equal brute force on random instances") {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    unsigned d = seed % 2 ? 2 : 3;
    int n = 5 + static_cast<int>(seed % 7);
    ObjectSet objs = small_instance(2000 + seed, n, d);
    IntersectionGraph g = build_intersection_graph(objs);

    ProblemInstance steiner = make_inst(g, Problem::SteinerTree);
    std::mt19937_64 rng(seed);
    int terms = 1 + static_cast<int>(rng() % std::min(4, n));
    std::vector<char> used(n, 0);
    while (static_cast<int>(steiner.terminals.size()) < terms) {
      int t = static_cast<int>(rng() % n);
      if (!used[t]) {
        used[t] = 1;
        steiner.terminals.push_back(t);
      }
    }
    SolveResult st_expect = brute_force(steiner);
    SolveResult st_got = solve(steiner);
    CHECK(st_got.feasible == st_expect.feasible);
    if (st_expect.feasible) CHECK(st_got.optimum == st_expect.optimum);

    ProblemInstance cvc = make_inst(g, Problem::ConnectedVertexCover);
    SolveResult cvc_expect = brute_force(cvc);
    SolveResult cvc_got = solve(cvc);
    CHECK(cvc_got.feasible == cvc_expect.feasible);
    if (cvc_expect.feasible) CHECK(cvc_got.optimum == cvc_expect.optimum);
  }
}

TEST_CASE("pruning never changes the optimum") {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    ObjectSet objs = small_instance(3000 + seed, 9, 2);
    IntersectionGraph g = build_intersection_graph(objs);
    for (Problem p : {Problem::IndependentSet, Problem::DominatingSet,
                      Problem::MaxInducedForest}) {
      ProblemInstance inst = make_inst(g, p);
      SolveOptions pruned, free;
      free.disable_pruning = true;
      CHECK(solve(inst, pruned).optimum == solve(inst, free).optimum);
    }
  }
}

TEST_CASE("complement identities and monotone growth") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    IntersectionGraph g = random_graph(9, 0.3, 4200 + seed);
    long is = solve(make_inst(g, Problem::IndependentSet)).optimum;
    long vc = solve(make_inst(g, Problem::VertexCover)).optimum;
    long mif = solve(make_inst(g, Problem::MaxInducedForest)).optimum;
    long fvs = solve(make_inst(g, Problem::FeedbackVertexSet)).optimum;
    CHECK(is + vc == g.n);
    CHECK(mif + fvs == g.n);

    // Appending an isolated vertex: IS and MIF +1, DS +1, VC unchanged.
    IntersectionGraph bigger = g;
    bigger.n += 1;
    bigger.adj.push_back({});
    long ds_before = solve(make_inst(g, Problem::DominatingSet)).optimum;
    CHECK(solve(make_inst(bigger, Problem::IndependentSet)).optimum == is + 1);
    CHECK(solve(make_inst(bigger, Problem::MaxInducedForest)).optimum == mif + 1);
    CHECK(solve(make_inst(bigger, Problem::DominatingSet)).optimum == ds_before + 1);
    CHECK(solve(make_inst(bigger, Problem::VertexCover)).optimum == vc);
  }
}

TEST_CASE("separator recursion agrees with the dp solver") {
  // Single clique of tangent disks: one independent vertex.
  ObjectSet clique = make_set(2, {ball(0, {0, 0}, 1), ball(1, {0.5, 0}, 1),
                                  ball(2, {0, 0.5}, 1)});
  CHECK(solve_separator_recursion_is(clique).optimum == 1);

  for (uint64_t seed = 1; seed <= 12; ++seed) {
    ObjectSet objs = small_instance(5000 + seed, 8 + static_cast<int>(seed % 8),
                                    seed % 2 ? 2 : 3);
    IntersectionGraph g = build_intersection_graph(objs);
    long expect = solve(make_inst(g, Problem::IndependentSet)).optimum;
    CHECK(solve_separator_recursion_is(objs).optimum == expect);
  }
}

TEST_CASE("witness verification accepts results and rejects tampering") {
  ObjectSet objs = small_instance(6100, 10, 2);
  IntersectionGraph g = build_intersection_graph(objs);
  ProblemInstance ds = make_inst(g, Problem::DominatingSet);
  SolveResult res = solve(ds);
  CHECK(verify_witness(ds, res.witness));
  if (!res.witness.empty()) {
    std::vector<int> tampered(res.witness.begin(), res.witness.end() - 1);
    // Dropping a vertex from a minimum dominating set must break domination.
    CHECK_FALSE(verify_witness(ds, tampered));
  }
  ProblemInstance is = make_inst(g, Problem::IndependentSet);
  SolveResult ris = solve(is);
  CHECK(verify_witness(is, ris.witness));
}

TEST_CASE("solver stats carry the decomposition profile") {
  ObjectSet objs = small_instance(7000, 12, 2);
  IntersectionGraph g = build_intersection_graph(objs);
  SolveResult res = solve(make_inst(g, Problem::DominatingSet));
  CHECK(res.stats.kappa_hat >= 1);
  CHECK(res.stats.weighted_width > 0);
  CHECK(res.stats.method == "blowup");
  CHECK(res.stats.prune_cap >= 1);
}
