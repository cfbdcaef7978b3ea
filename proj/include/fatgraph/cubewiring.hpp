#pragma once

#include <string>
#include <vector>

namespace fatgraph {

// Lattice point; fragments use d-1 "floor" coordinates plus a final height
// coordinate. Coordinates are 1-based.
using GridPoint = std::vector<int>;

struct WiringInstance {
  unsigned d = 3;          // ambient dimension, >= 3
  std::vector<int> n;      // floor box sizes, d-1 entries
  // Matched pairs (p in P, q in Q), both inside Box(n).
  std::vector<std::pair<GridPoint, GridPoint>> matching;

  void validate() const;  // throws std::invalid_argument
};

struct Wire {
  GridPoint from, to;             // floor endpoints (d-1 coords)
  std::vector<GridPoint> points;  // full path; starts at height 1
};

struct Wiring {
  unsigned d = 3;
  std::vector<int> n;    // instance sizes
  std::vector<int> box;  // floor bounds of the routing volume (36 * n)
  int height = 0;
  long wire_length_bound = 0;
  std::vector<Wire> wires;  // wires[i] realizes matching[i]
};

// Fragment of a wiring: paths from height 1 up to height `top`, one per
// routed point. Exposed for the rearrangement lemmas' unit tests.
struct WireFragment {
  std::vector<std::vector<GridPoint>> paths;
  int top = 1;
};

// Per-cell rerouting in 3 layers. Pairs must be quasi-k-spaced with matched
// k-cells (at most one pair per cell, p and q in the same cell).
WireFragment local_movement(const std::vector<std::pair<GridPoint, GridPoint>>& pairs, int k);

// Translate all points by `shift` >= 0 along `axis`. A wire starting at
// coordinate i rises axis_size+1-i layers, slides, and rises to the common
// top; axis_size+2 layers in total.
WireFragment global_movement(const std::vector<GridPoint>& points, unsigned axis, int shift,
                             int axis_size);

// Wires a k-spaced set onto its cell indices, axis by axis. cell_base selects
// 0-based cells (the compression map floor((x-1)/k)) or 1-based cells.
WireFragment compress(const std::vector<GridPoint>& points, int k, int cell_base = 0);

// Reverse wiring of compress: from the cell indices back to the k-spaced set.
WireFragment expand(const std::vector<GridPoint>& points, int k, int cell_base = 0);

// Lexicographic matching between equal-size subsets of Box(n), inside
// Box(6n), in at most 3*max(n)+2 layers.
WireFragment push_pull(const std::vector<GridPoint>& P, const std::vector<GridPoint>& Q,
                       const std::vector<int>& n);

// Full divide-and-conquer routing of an arbitrary matching; the result lives
// in Box(36n) x height with height = O(sum n_i).
Wiring wire_matching(const WiringInstance& inst);

// Structural checks: unit steps, pairwise vertex-disjointness, endpoint
// correctness, containment, length bound. Returns violations, never throws.
std::vector<std::string> verify_wiring(const Wiring& w, const WiringInstance& inst);

}  // namespace fatgraph
