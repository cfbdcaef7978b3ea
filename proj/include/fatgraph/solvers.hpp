#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fatgraph/geometry.hpp"
#include "fatgraph/separator.hpp"
#include "fatgraph/treedecomp.hpp"

namespace fatgraph {

enum class Problem {
  IndependentSet,
  VertexCover,
  DominatingSet,     // r-dominating set, r from the instance
  SteinerTree,
  MaxInducedForest,
  FeedbackVertexSet,
  ConnectedVertexCover,
};

Problem problem_from_name(const std::string& name);
std::string problem_name(Problem p);

struct ProblemInstance {
  IntersectionGraph graph;
  Problem problem = Problem::IndependentSet;
  int r = 1;                   // domination radius
  std::vector<int> terminals;  // Steiner terminals
  long budget = -1;            // Steiner decision budget; -1 = just optimize

  void validate() const;
};

struct SolveStats {
  double weighted_width = 0;  // tau of the decomposition driving the DP
  int kappa_hat = 0;
  int delta_hat = 0;
  long prune_cap = -1;        // per-class selection cap in force (-1: none)
  long peak_states = 0;
  double wall_seconds = 0;
  std::string method;         // decomposition route
};

struct SolveResult {
  bool feasible = true;
  long optimum = 0;
  std::vector<int> witness;  // sorted vertex set achieving the optimum
  SolveStats stats;
};

struct SolveOptions {
  WeightFunction gamma = WeightFunction::log2p1();
  // With geometry, route the decomposition through the contraction separator
  // recursion instead of the graph-only blowup path.
  const ObjectSet* geometry = nullptr;
  bool use_separator_decomposition = false;
  SeparatorOptions sep;
  double base_c = 4.0;       // base-case constant of the separator recursion
  bool disable_pruning = false;
};

// Exact solve by dynamic programming on a traditional tree decomposition with
// partition-class pruning. The witness is re-verified before returning.
SolveResult solve(const ProblemInstance& inst, const SolveOptions& opts = {});

// Maximum independent set by separator recursion over per-clique choices;
// works for arbitrarily sized fat objects.
SolveResult solve_separator_recursion_is(const ObjectSet& objs,
                                         const SeparatorOptions& opts = {});

// Checks the defining predicate of the instance's problem directly.
bool verify_witness(const ProblemInstance& inst, const std::vector<int>& witness);

}  // namespace fatgraph
