#include "fatgraph/geometry.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace fatgraph {

void Bounds::merge(const Bounds& other) {
  for (unsigned i = 0; i < dimension(); ++i) {
    if (other.lo[i] < lo[i]) lo[i] = other.lo[i];
    if (other.hi[i] > hi[i]) hi[i] = other.hi[i];
  }
}

unsigned FatObject::dimension() const {
  if (const Ball* b = std::get_if<Ball>(&shape)) return b->center.dimension();
  return std::get<Box>(shape).min_corner.dimension();
}

Rational FatObject::diameter_sq() const {
  if (const Ball* b = std::get_if<Ball>(&shape)) {
    Rational d = 2 * b->radius;
    return d * d;
  }
  const Box& box = std::get<Box>(shape);
  Rational s = 0;
  for (const Rational& side : box.sides) s += side * side;
  return s;
}

double FatObject::diameter() const {
  return sqrt_lower(diameter_sq(), 24).get_d();
}

Bounds FatObject::bounds() const {
  Bounds b;
  if (const Ball* ball = std::get_if<Ball>(&shape)) {
    for (const Rational& c : ball->center.coords) {
      b.lo.push_back(c - ball->radius);
      b.hi.push_back(c + ball->radius);
    }
  } else {
    const Box& box = std::get<Box>(shape);
    for (unsigned i = 0; i < box.min_corner.dimension(); ++i) {
      b.lo.push_back(box.min_corner.coords[i]);
      b.hi.push_back(box.min_corner.coords[i] + box.sides[i]);
    }
  }
  return b;
}

Ball FatObject::inner_ball() const {
  if (const Ball* ball = std::get_if<Ball>(&shape)) return *ball;
  const Box& box = std::get<Box>(shape);
  Ball in;
  Rational min_side = box.sides[0];
  for (const Rational& s : box.sides)
    if (s < min_side) min_side = s;
  for (unsigned i = 0; i < box.min_corner.dimension(); ++i)
    in.center.coords.push_back(box.min_corner.coords[i] + box.sides[i] / 2);
  in.radius = min_side / 2;
  return in;
}

Rational FatObject::fatness_lower(unsigned bits) const {
  if (is_ball()) return Rational(1);
  // min_side / diagonal, with the irrational diagonal replaced by a rational
  // upper bound.
  const Box& box = std::get<Box>(shape);
  Rational min_side = box.sides[0];
  for (const Rational& s : box.sides)
    if (s < min_side) min_side = s;
  Rational diag_ub = sqrt_upper(diameter_sq(), bits);
  return min_side / diag_ub;
}

void ObjectSet::validate() const {
  if (dimension < 2) throw std::invalid_argument("dimension must be >= 2");
  for (int i = 0; i < size(); ++i) {
    const FatObject& o = objects[i];
    if (o.id != i) throw std::invalid_argument("object ids must be 0..n-1 in order");
    if (o.dimension() != dimension)
      throw std::invalid_argument("object dimension mismatch");
    if (const Ball* b = std::get_if<Ball>(&o.shape)) {
      if (b->radius <= 0) throw std::invalid_argument("ball radius must be positive");
    } else {
      const Box& box = std::get<Box>(o.shape);
      if (box.sides.size() != box.min_corner.coords.size())
        throw std::invalid_argument("box sides/corner dimension mismatch");
      for (const Rational& s : box.sides)
        if (s <= 0) throw std::invalid_argument("box side must be positive");
    }
  }
}

Rational ObjectSet::min_diameter_sq() const {
  if (objects.empty()) throw std::invalid_argument("empty object set");
  Rational m = objects[0].diameter_sq();
  for (const FatObject& o : objects) m = std::min(m, o.diameter_sq());
  return m;
}

Rational ObjectSet::max_diameter_sq() const {
  if (objects.empty()) throw std::invalid_argument("empty object set");
  Rational m = objects[0].diameter_sq();
  for (const FatObject& o : objects) m = std::max(m, o.diameter_sq());
  return m;
}

double ObjectSet::size_ratio() const {
  return sqrt_upper(max_diameter_sq() / min_diameter_sq(), 24).get_d();
}

Rational ObjectSet::fatness_lower() const {
  if (objects.empty()) throw std::invalid_argument("empty object set");
  Rational a = objects[0].fatness_lower();
  for (const FatObject& o : objects) a = std::min(a, o.fatness_lower());
  return a;
}

namespace {

bool ball_ball(const Ball& a, const Ball& b) {
  Rational dist_sq = 0;
  for (unsigned i = 0; i < a.center.dimension(); ++i) {
    Rational d = a.center.coords[i] - b.center.coords[i];
    dist_sq += d * d;
  }
  Rational r = a.radius + b.radius;
  return dist_sq <= r * r;
}

bool box_box(const Box& a, const Box& b) {
  for (unsigned i = 0; i < a.min_corner.dimension(); ++i) {
    Rational a_lo = a.min_corner.coords[i];
    Rational a_hi = a_lo + a.sides[i];
    Rational b_lo = b.min_corner.coords[i];
    Rational b_hi = b_lo + b.sides[i];
    if (a_hi < b_lo || b_hi < a_lo) return false;
  }
  return true;
}

bool ball_box(const Ball& ball, const Box& box) {
  // Squared distance from the center to the box via per-axis clamping.
  Rational dist_sq = 0;
  for (unsigned i = 0; i < ball.center.dimension(); ++i) {
    const Rational& c = ball.center.coords[i];
    Rational lo = box.min_corner.coords[i];
    Rational hi = lo + box.sides[i];
    if (c < lo) {
      Rational d = lo - c;
      dist_sq += d * d;
    } else if (c > hi) {
      Rational d = c - hi;
      dist_sq += d * d;
    }
  }
  return dist_sq <= ball.radius * ball.radius;
}

}  // namespace

bool intersects(const FatObject& a, const FatObject& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("intersects: dimension mismatch");
  if (a.is_ball() && b.is_ball())
    return ball_ball(std::get<Ball>(a.shape), std::get<Ball>(b.shape));
  if (!a.is_ball() && !b.is_ball())
    return box_box(std::get<Box>(a.shape), std::get<Box>(b.shape));
  const Ball& ball = a.is_ball() ? std::get<Ball>(a.shape) : std::get<Ball>(b.shape);
  const Box& box = a.is_ball() ? std::get<Box>(b.shape) : std::get<Box>(a.shape);
  return ball_box(ball, box);
}

bool intersects_box(const FatObject& o, const std::vector<Rational>& lo,
                    const std::vector<Rational>& hi) {
  Box probe;
  probe.min_corner.coords = lo;
  for (unsigned i = 0; i < lo.size(); ++i) probe.sides.push_back(hi[i] - lo[i]);
  if (o.is_ball()) return ball_box(std::get<Ball>(o.shape), probe);
  return box_box(std::get<Box>(o.shape), probe);
}

bool strictly_inside_box(const FatObject& o, const std::vector<Rational>& lo,
                         const std::vector<Rational>& hi) {
  Bounds b = o.bounds();
  for (unsigned i = 0; i < lo.size(); ++i) {
    if (!(b.lo[i] > lo[i] && b.hi[i] < hi[i])) return false;
  }
  return true;
}

bool IntersectionGraph::adjacent(int u, int v) const {
  const std::vector<int>& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
  int other = adj[u].size() <= adj[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

int IntersectionGraph::edge_count() const {
  int total = 0;
  for (const auto& a : adj) total += static_cast<int>(a.size());
  return total / 2;
}

IntersectionGraph IntersectionGraph::from_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
  IntersectionGraph g;
  g.n = n;
  g.adj.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops not allowed");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  g.finalize();
  return g;
}

void IntersectionGraph::add_edge(int u, int v) {
  adj[u].push_back(v);
  adj[v].push_back(u);
}

void IntersectionGraph::finalize() {
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
}

std::vector<int> IntersectionGraph::component_of(int start) const {
  std::vector<char> seen(n, 0);
  std::vector<int> comp, queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    comp.push_back(v);
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

std::vector<std::vector<int>> IntersectionGraph::components() const {
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp = component_of(s);
    for (int v : comp) seen[v] = 1;
    out.push_back(std::move(comp));
  }
  return out;
}

bool IntersectionGraph::connected() const {
  if (n == 0) return true;
  return static_cast<int>(component_of(0).size()) == n;
}

std::vector<int> IntersectionGraph::bfs_distances(int source) const {
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

IntersectionGraph IntersectionGraph::induced(const std::vector<int>& vertices,
                                             std::vector<int>* old_of_new) const {
  std::vector<int> index(n, -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
  IntersectionGraph g;
  g.n = static_cast<int>(vertices.size());
  g.adj.assign(g.n, {});
  for (int i = 0; i < g.n; ++i)
    for (int w : adj[vertices[i]])
      if (index[w] >= 0) g.adj[i].push_back(index[w]);
  g.finalize();
  if (old_of_new) *old_of_new = vertices;
  return g;
}

IntersectionGraph build_intersection_graph_naive(const ObjectSet& objs) {
  objs.validate();
  IntersectionGraph g;
  g.n = objs.size();
  g.adj.assign(g.n, {});
  for (int i = 0; i < g.n; ++i) g.object_ids.push_back(objs.objects[i].id);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (intersects(objs.objects[i], objs.objects[j])) g.add_edge(i, j);
  g.finalize();
  return g;
}

ObjectSet subset_objects(const ObjectSet& objs, const std::vector<int>& keep) {
  ObjectSet out;
  out.dimension = objs.dimension;
  for (int idx : keep) {
    FatObject o = objs.objects.at(idx);
    o.id = out.size();
    out.objects.push_back(std::move(o));
  }
  return out;
}

IntersectionGraph build_intersection_graph(const ObjectSet& objs) {
  objs.validate();
  if (objs.objects.empty()) throw std::invalid_argument("empty object set");
  int n = objs.size();

  // Bucket by bounding-box min corner with cell side = max diameter. Two
  // intersecting objects have overlapping bounding boxes, so their min
  // corners land in cells at Chebyshev distance <= 1.
  Rational cell = sqrt_upper(objs.max_diameter_sq(), 24);
  std::vector<Bounds> bounds;
  bounds.reserve(n);
  for (const FatObject& o : objs.objects) bounds.push_back(o.bounds());

  std::map<std::vector<long>, std::vector<int>> buckets;
  std::vector<std::vector<long>> keys(n);
  for (int i = 0; i < n; ++i) {
    std::vector<long> key;
    key.reserve(objs.dimension);
    for (unsigned a = 0; a < objs.dimension; ++a)
      key.push_back(floor_rational(bounds[i].lo[a] / cell).get_si());
    buckets[key].push_back(i);
    keys[i] = std::move(key);
  }

  IntersectionGraph g;
  g.n = n;
  g.adj.assign(n, {});
  for (int i = 0; i < n; ++i) g.object_ids.push_back(objs.objects[i].id);

  std::vector<long> probe(objs.dimension);
  for (int i = 0; i < n; ++i) {
    unsigned d = objs.dimension;
    std::vector<int> offsets(d, -1);
    while (true) {
      for (unsigned a = 0; a < d; ++a) probe[a] = keys[i][a] + offsets[a];
      auto it = buckets.find(probe);
      if (it != buckets.end()) {
        for (int j : it->second)
          if (j > i && intersects(objs.objects[i], objs.objects[j])) g.add_edge(i, j);
      }
      unsigned a = 0;
      while (a < d && offsets[a] == 1) offsets[a++] = -1;
      if (a == d) break;
      ++offsets[a];
    }
  }
  g.finalize();
  return g;
}

}  // namespace fatgraph
