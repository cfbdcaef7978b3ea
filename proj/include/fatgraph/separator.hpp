#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fatgraph/contraction.hpp"
#include "fatgraph/errors.hpp"
#include "fatgraph/geometry.hpp"
#include "fatgraph/weightfn.hpp"

namespace fatgraph {

struct Hypercube {
  Point center;
  Rational side;
};

// Balanced separator given as a clique partition plus the two sides.
// Indices refer to object ids (build_separator) or partition-class ids
// (separator_for_contraction).
struct CliqueSeparator {
  std::vector<std::vector<int>> cliques;
  std::vector<int> side_a;  // strict interior of the winning shell
  std::vector<int> side_b;  // strict exterior
  Rational weight;
  Rational balance;  // max(side multiplicity) / total multiplicity
  int shell_index = -1;
  int item_count = 0;
  // Exact weight of every candidate shell, indexed 1..m (entry 0 unused).
  std::vector<Rational> candidate_weights;
};

struct SeparatorOptions {
  WeightFunction gamma = WeightFunction::log2p1();
  // Base-hypercube search: the default is an exact sweep (binary search on
  // the side length with an integer box-depth decision). exact_h0 switches
  // to the O(n^(d+2)) candidate enumeration; both return a minimum-side
  // hypercube.
  bool exact_h0 = false;
};

// 6^d / (6^d + 1)
Rational balance_bound(unsigned d);

// Minimum-side axis-aligned hypercube fully containing at least
// ceil(n / (6^d + 1)) objects.
Hypercube find_base_hypercube(const ObjectSet& objs, bool exact_enumeration = false);

// Reference oracle: enumerate lower faces and side lengths from object
// bounding-box coordinates. O(n^(d+2)); intended for tests and --exact-h0.
Hypercube find_base_hypercube_enumerate(const ObjectSet& objs);

// m = ceil(n^(1/d)) concentric hypercubes around h0, the i-th with side
// side(h0) * (1 + 2i/m); the last has side 3 * side(h0).
std::vector<Hypercube> build_candidate_shells(const Hypercube& h0, long n, unsigned d);

// Clique cover of one size class via a stabbing grid, in coordinates
// normalized to the base hypercube. Objects must satisfy
// 2^(s-1)/n^(1/d) <= diam < 2^s/n^(1/d); throws otherwise.
std::vector<std::vector<int>> clique_cover_size_class(const std::vector<FatObject>& objs,
                                                      int s, long n);

// Full Step 1-2 construction: normalize on the base hypercube, classify
// large objects and size classes, stab each class, evaluate all shell
// candidates and return the minimum-weight one (ties: smallest shell index).
CliqueSeparator build_separator(const ObjectSet& objs, const SeparatorOptions& opts = {});

// Same construction over the union-objects of partition classes. Weights are
// the class node weights gamma(|V_i|); balance counts original vertices.
CliqueSeparator separator_for_contraction(const KappaPartition& part, const ObjectSet& objs,
                                          const SeparatorOptions& opts = {});

// Structural validation against the (possibly contracted) graph whose
// vertices the separator indexes: cliques complete, no side_a x side_b edge,
// partition exactness, balance within 6^d/(6^d+1). Multiplicities default
// to 1 per vertex.
std::vector<std::string> validate_separator(const CliqueSeparator& sep,
                                            const IntersectionGraph& g, unsigned d,
                                            const std::vector<long>* multiplicity = nullptr);

}  // namespace fatgraph
