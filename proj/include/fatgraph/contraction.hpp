#pragma once

#include <vector>

#include "fatgraph/geometry.hpp"
#include "fatgraph/weightfn.hpp"

namespace fatgraph {

// Contraction of a partition into classes: one node per class, an edge when
// any original edge joins the two classes, loops and parallels removed.
struct ContractedGraph {
  IntersectionGraph graph;
  std::vector<long> class_sizes;
  std::vector<Rational> node_weights;  // gamma(|V_i|)

  int node_count() const { return graph.n; }
  int max_degree() const;
};

struct KappaPartition {
  std::vector<std::vector<int>> classes;                    // V_1..V_k, members sorted
  std::vector<int> class_of;                                // vertex -> class index
  std::vector<std::vector<std::vector<int>>> clique_covers; // per class, <= kappa_hat cliques
  int kappa_hat = 0;                                        // max cover size achieved
  int delta_hat = 0;                                        // max degree of the contraction
  ContractedGraph contracted;

  int class_count() const { return static_cast<int>(classes.size()); }
};

// Deterministic maximal independent set: scan vertices in id order, add when
// no neighbor is already in.
std::vector<int> greedy_mis(const IntersectionGraph& g);

// Classes are stars around MIS vertices; every non-MIS vertex joins its
// lowest-id MIS neighbor. Per-class covers come from greedy clique extraction
// in id order.
KappaPartition build_kappa_partition(const IntersectionGraph& g, const WeightFunction& gamma);

// Throws std::invalid_argument when classes do not partition the vertex set.
ContractedGraph contract(const IntersectionGraph& g,
                         const std::vector<std::vector<int>>& classes,
                         const WeightFunction& gamma);

// Classes whose contracted node lies within distance r of cls (including
// cls itself); BFS on the contracted graph.
std::vector<int> classes_within_distance(const ContractedGraph& gp, int cls, int r);

}  // namespace fatgraph
