#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fatgraph/contraction.hpp"
#include "fatgraph/separator.hpp"

namespace fatgraph {

// Tree decomposition of a contracted graph; bags hold class indices and the
// weighted width is the maximum bag sum of gamma(|V_i|) (no -1).
struct WeightedTreeDecomposition {
  std::vector<std::vector<int>> bags;  // sorted class ids per tree node
  std::vector<std::pair<int, int>> tree_edges;
  Rational weighted_width;

  int node_count() const { return static_cast<int>(bags.size()); }
};

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NodeKind kind = NodeKind::Leaf;
  int vertex = -1;          // introduced / forgotten vertex
  int child = -1;           // first child (Leaf: none)
  int child2 = -1;          // Join only
  std::vector<int> bag;     // sorted original vertices
};

// Per-vertex nice decomposition. Nodes are stored in postorder; the root has
// an empty bag and every class's members are introduced before any one of
// them is forgotten.
struct TraditionalTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  int node_count() const { return static_cast<int>(nodes.size()); }
};

// Callback contract: given a sorted subset of contracted-node ids, return the
// separator as a subset of those ids. Balance and validity are the
// callback's responsibility.
using SeparatorCallback = std::function<std::vector<int>(const std::vector<int>&)>;

// Recursive construction: separate, recurse on the connected components of
// the remainder, chain the subtree roots, and union the separator into every
// bag of the subtrees. Subsets whose total weight is at most base_weight
// become single bags.
WeightedTreeDecomposition decompose_by_separator(const ContractedGraph& gp,
                                                 const SeparatorCallback& sep_fn,
                                                 const Rational& base_weight);

// Geometric callback: runs separator_for_contraction on the sub-instance
// induced by a class subset.
SeparatorCallback geometric_separator_callback(const KappaPartition& part,
                                               const ObjectSet& objs,
                                               const SeparatorOptions& opts = {});

// Replace every contracted node by a clique of ceil(gamma(|V_i|)) unit
// vertices, fully joined along contracted edges. clique_of_node receives the
// vertex range of each class.
IntersectionGraph blowup(const ContractedGraph& gp,
                         std::vector<std::vector<int>>* clique_of_node = nullptr);

// Greedy minimum-fill-in elimination order (ties: lowest vertex id).
std::vector<int> min_fill_order(const IntersectionGraph& g);

// Tree decomposition of a plain graph from an elimination order.
WeightedTreeDecomposition decomposition_from_elimination(const IntersectionGraph& g,
                                                         const std::vector<int>& order);

// Robust path: decompose the blowup of Gp with min-fill, then map each bag
// back (a class joins a bag exactly when the bag holds its full clique).
WeightedTreeDecomposition decompose_by_blowup(const ContractedGraph& gp);

// Nice per-vertex decomposition; class members are introduced and forgotten
// as contiguous runs in id order, joins are binary, the root bag is empty.
TraditionalTreeDecomposition to_traditional(const WeightedTreeDecomposition& wtd,
                                            const KappaPartition& part);

// Tree-decomposition axioms against the contracted graph; returns structured
// violations and never throws.
std::vector<std::string> validate_decomposition(const WeightedTreeDecomposition& wtd,
                                                const ContractedGraph& gp);

// Grammar, axioms over the original graph, and class contiguity when a
// partition is supplied.
std::vector<std::string> validate_traditional(const TraditionalTreeDecomposition& trad,
                                              const IntersectionGraph& g,
                                              const KappaPartition* part = nullptr);

// Max bag weight of a traditional decomposition measured through class
// weights (each bag is charged the classes it touches).
Rational traditional_weighted_width(const TraditionalTreeDecomposition& trad,
                                    const KappaPartition& part);

}  // namespace fatgraph
