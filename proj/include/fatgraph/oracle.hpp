#pragma once

#include <cstdint>

#include "fatgraph/solvers.hpp"

namespace fatgraph {

// Deterministic random instances: centers uniform in [0, region_side]^d,
// radii/sides uniform in [1, size_ratio], every coordinate snapped to
// denominator 2^16.
struct GeneratorConfig {
  unsigned d = 2;
  int n = 10;
  double box_fraction = 0.0;  // fraction of boxes among the objects
  double size_ratio = 1.5;    // sigma
  double region_side = 10.0;
  uint64_t seed = 1;
};

ObjectSet gen_instance(const GeneratorConfig& cfg);

// Exhaustive subset enumeration with direct feasibility predicates.
// Guarded: n <= 24, and n <= 14 for the connectivity problems
// (Steiner, connected vertex cover).
SolveResult brute_force(const ProblemInstance& inst);

}  // namespace fatgraph
