#pragma once

#include <random>
#include <vector>

#include "fatgraph/geometry.hpp"
#include "fatgraph/oracle.hpp"

namespace fatgraph::testing {

inline Point pt(std::initializer_list<double> cs) {
  Point p;
  for (double c : cs) {
    Rational q(c);
    q.canonicalize();
    p.coords.push_back(q);
  }
  return p;
}

inline FatObject ball(int id, std::initializer_list<double> center, double radius) {
  FatObject o;
  o.id = id;
  Ball b;
  b.center = pt(center);
  b.radius = Rational(radius);
  b.radius.canonicalize();
  o.shape = std::move(b);
  return o;
}

inline FatObject box(int id, std::initializer_list<double> corner,
                     std::initializer_list<double> sides) {
  FatObject o;
  o.id = id;
  Box b;
  b.min_corner = pt(corner);
  for (double s : sides) {
    Rational q(s);
    q.canonicalize();
    b.sides.push_back(q);
  }
  o.shape = std::move(b);
  return o;
}

inline ObjectSet make_set(unsigned d, std::vector<FatObject> objs) {
  ObjectSet s;
  s.dimension = d;
  s.objects = std::move(objs);
  return s;
}

// Random graph with the given edge probability (per pair), deterministic.
inline IntersectionGraph random_graph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  long threshold = static_cast<long>(p * 10000);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<long>(rng() % 10000) < threshold) edges.emplace_back(u, v);
  return IntersectionGraph::from_edges(n, edges);
}

}  // namespace fatgraph::testing
