#pragma once

#include <string>
#include <vector>

#include "fatgraph/cubewiring.hpp"
#include "fatgraph/geometry.hpp"

namespace fatgraph {

// Grid realization of a graph as a minor: one branch set per input vertex
// (a bottom-layer path plus the wires leaving it), and one connector edge per
// input edge joining two branch sets in the top layer. Branch sets are
// connected in the lattice and pairwise disjoint; contracting them along the
// connector edges recovers the input graph.
struct MinorEmbedding {
  unsigned d = 3;
  std::vector<int> box;  // full box: d-1 floor sizes then the height
  std::vector<std::vector<GridPoint>> branch_sets;
  std::vector<std::pair<GridPoint, GridPoint>> connectors;  // aligned with edges
  std::vector<std::pair<int, int>> edges;                   // input edges, u < v
};

// Throws std::invalid_argument on isolated vertices, unsupported_error for
// d < 3.
MinorEmbedding embed_minor(const IntersectionGraph& g, unsigned d);

// Disjointness, branch-set connectivity, connector validity, containment.
std::vector<std::string> verify_minor_embedding(const MinorEmbedding& emb);

// Quotient graph: one node per branch set, edges from the connectors.
IntersectionGraph contract_embedding(const MinorEmbedding& emb);

// Lexicographically smallest adjacency matrix over all vertex orderings;
// exponential, intended for graphs with at most ~10 vertices.
std::vector<uint64_t> canonical_form(const IntersectionGraph& g);

bool isomorphic_small(const IntersectionGraph& a, const IntersectionGraph& b);

}  // namespace fatgraph
