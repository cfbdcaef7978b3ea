#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "fatgraph/rational.hpp"

namespace fatgraph {

struct Point {
  std::vector<Rational> coords;

  unsigned dimension() const { return static_cast<unsigned>(coords.size()); }
  bool operator==(const Point& o) const { return coords == o.coords; }
};

struct Ball {
  Point center;
  Rational radius;  // > 0
};

struct Box {
  Point min_corner;
  std::vector<Rational> sides;  // all > 0
};

// Axis-aligned bounding box, closed on both ends.
struct Bounds {
  std::vector<Rational> lo;
  std::vector<Rational> hi;

  unsigned dimension() const { return static_cast<unsigned>(lo.size()); }
  // Smallest enclosing bounds of this and other.
  void merge(const Bounds& other);
};

struct FatObject {
  int id = -1;
  std::variant<Ball, Box> shape;

  unsigned dimension() const;
  bool is_ball() const { return std::holds_alternative<Ball>(shape); }

  // Exact squared diameter: (2r)^2 for balls, sum of squared sides for boxes.
  Rational diameter_sq() const;
  double diameter() const;

  Bounds bounds() const;

  // Largest inscribed ball: the ball itself, or the box center with radius
  // min(side)/2. Exact; used to place stabbing points.
  Ball inner_ball() const;

  // Lower bound on fatness alpha = r_in / (diam/2); 1 for balls.
  Rational fatness_lower(unsigned bits = 24) const;
};

struct ObjectSet {
  unsigned dimension = 0;
  std::vector<FatObject> objects;

  int size() const { return static_cast<int>(objects.size()); }

  // Throws std::invalid_argument when dimensions are inconsistent, ids are
  // not 0..n-1, or a radius/side is non-positive.
  void validate() const;

  Rational min_diameter_sq() const;
  Rational max_diameter_sq() const;
  // max diam / min diam as a double (metadata only).
  double size_ratio() const;
  // Minimum fatness lower bound over the set.
  Rational fatness_lower() const;
};

// Closed-object convention: touching objects intersect.
// Throws std::invalid_argument on dimension mismatch.
bool intersects(const FatObject& a, const FatObject& b);

// Object vs closed axis-aligned box [lo, hi].
bool intersects_box(const FatObject& o, const std::vector<Rational>& lo,
                    const std::vector<Rational>& hi);

// Object strictly inside the open box (lo, hi).
bool strictly_inside_box(const FatObject& o, const std::vector<Rational>& lo,
                         const std::vector<Rational>& hi);

struct IntersectionGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;   // sorted neighbor lists
  std::vector<int> object_ids;         // empty when graph-only

  bool adjacent(int u, int v) const;
  int edge_count() const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  static IntersectionGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  void add_edge(int u, int v);
  void finalize();  // sort + dedupe neighbor lists

  std::vector<int> component_of(int start) const;
  std::vector<std::vector<int>> components() const;
  bool connected() const;

  // BFS distances from source, -1 for unreachable.
  std::vector<int> bfs_distances(int source) const;

  IntersectionGraph induced(const std::vector<int>& vertices,
                            std::vector<int>* old_of_new = nullptr) const;
};

// Exact intersection graph. Uses a uniform-grid bucket accelerator with cell
// side = max diameter; output is identical to the all-pairs construction.
IntersectionGraph build_intersection_graph(const ObjectSet& objs);

// All-pairs reference construction (test oracle).
IntersectionGraph build_intersection_graph_naive(const ObjectSet& objs);

// Sub-instance with ids renumbered 0..k-1 in the order of `keep`.
ObjectSet subset_objects(const ObjectSet& objs, const std::vector<int>& keep);

}  // namespace fatgraph
