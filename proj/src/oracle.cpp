#include "fatgraph/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fatgraph {

namespace {

constexpr long kSnap = 1 << 16;

// Uniform integer in [lo, hi] from raw 64-bit draws; deterministic across
// platforms (std::mt19937_64 has a pinned sequence, distributions do not).
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

Rational snapped(std::mt19937_64& rng, double lo, double hi) {
  long lo16 = static_cast<long>(lo * kSnap);
  long hi16 = static_cast<long>(hi * kSnap);
  Rational q(Integer(draw(rng, lo16, hi16)), Integer(kSnap));
  q.canonicalize();
  return q;
}

}  // namespace

ObjectSet gen_instance(const GeneratorConfig& cfg) {
  if (cfg.d < 2) throw std::invalid_argument("dimension must be >= 2");
  if (cfg.n < 1) throw std::invalid_argument("instance size must be >= 1");
  if (cfg.size_ratio < 1.0) throw std::invalid_argument("size ratio must be >= 1");
  std::mt19937_64 rng(cfg.seed);
  ObjectSet out;
  out.dimension = cfg.d;
  long box_threshold = static_cast<long>(cfg.box_fraction * 10000);
  for (int i = 0; i < cfg.n; ++i) {
    bool is_box = draw(rng, 0, 9999) < box_threshold;
    FatObject o;
    o.id = i;
    if (is_box) {
      Box box;
      for (unsigned a = 0; a < cfg.d; ++a)
        box.min_corner.coords.push_back(snapped(rng, 0.0, cfg.region_side));
      for (unsigned a = 0; a < cfg.d; ++a)
        box.sides.push_back(snapped(rng, 1.0, cfg.size_ratio));
      o.shape = std::move(box);
    } else {
      Ball ball;
      for (unsigned a = 0; a < cfg.d; ++a)
        ball.center.coords.push_back(snapped(rng, 0.0, cfg.region_side));
      ball.radius = snapped(rng, 1.0, cfg.size_ratio);
      o.shape = std::move(ball);
    }
    out.objects.push_back(std::move(o));
  }
  return out;
}

namespace {

bool mask_connected(const std::vector<uint32_t>& adj, uint32_t mask) {
  if (mask == 0) return true;
  uint32_t start = mask & uint32_t(-mask);
  uint32_t seen = start;
  uint32_t frontier = start;
  while (frontier) {
    uint32_t next = 0;
    uint32_t f = frontier;
    while (f) {
      int v = __builtin_ctz(f);
      f &= f - 1;
      next |= adj[v] & mask;
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

bool mask_acyclic(const std::vector<uint32_t>& adj, uint32_t mask) {
  // Forest test: edges == vertices - components.
  int vertices = __builtin_popcount(mask);
  int edges = 0;
  uint32_t m = mask;
  while (m) {
    int v = __builtin_ctz(m);
    m &= m - 1;
    edges += __builtin_popcount(adj[v] & mask & ~((uint32_t{1} << (v + 1)) - 1));
  }
  int components = 0;
  uint32_t left = mask;
  while (left) {
    uint32_t start = left & uint32_t(-left);
    uint32_t seen = start, frontier = start;
    while (frontier) {
      uint32_t next = 0;
      uint32_t f = frontier;
      while (f) {
        int v = __builtin_ctz(f);
        f &= f - 1;
        next |= adj[v] & mask;
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    left &= ~seen;
    ++components;
  }
  return edges == vertices - components;
}

}  // namespace

SolveResult brute_force(const ProblemInstance& inst) {
  inst.validate();
  const IntersectionGraph& g = inst.graph;
  int n = g.n;
  bool connectivity_problem =
      inst.problem == Problem::SteinerTree || inst.problem == Problem::ConnectedVertexCover;
  if (n > 24 || (connectivity_problem && n > 14))
    throw std::invalid_argument("instance too large for the brute-force oracle");

  std::vector<uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.adj[v]) adj[v] |= uint32_t{1} << w;
  uint32_t full = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;

  // Distance-r balls for domination.
  std::vector<uint32_t> ball;
  if (inst.problem == Problem::DominatingSet) {
    ball.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      std::vector<int> dist = g.bfs_distances(v);
      for (int w = 0; w < n; ++w)
        if (dist[w] >= 0 && dist[w] <= inst.r) ball[v] |= uint32_t{1} << w;
    }
  }
  uint32_t terminal_mask = 0;
  for (int t : inst.terminals) terminal_mask |= uint32_t{1} << t;

  auto feasible = [&](uint32_t mask) -> bool {
    switch (inst.problem) {
      case Problem::IndependentSet: {
        uint32_t m = mask;
        while (m) {
          int v = __builtin_ctz(m);
          m &= m - 1;
          if (adj[v] & mask) return false;
        }
        return true;
      }
      case Problem::VertexCover: {
        uint32_t rest = full & ~mask;
        uint32_t m = rest;
        while (m) {
          int v = __builtin_ctz(m);
          m &= m - 1;
          if (adj[v] & rest) return false;
        }
        return true;
      }
      case Problem::DominatingSet: {
        uint32_t covered = 0;
        uint32_t m = mask;
        while (m) {
          int v = __builtin_ctz(m);
          m &= m - 1;
          covered |= ball[v];
        }
        return covered == full;
      }
      case Problem::SteinerTree:
        return (mask & terminal_mask) == terminal_mask && mask_connected(adj, mask);
      case Problem::MaxInducedForest:
        return mask_acyclic(adj, mask);
      case Problem::FeedbackVertexSet:
        return mask_acyclic(adj, full & ~mask);
      case Problem::ConnectedVertexCover: {
        uint32_t rest = full & ~mask;
        uint32_t m = rest;
        while (m) {
          int v = __builtin_ctz(m);
          m &= m - 1;
          if (adj[v] & rest) return false;
        }
        return mask_connected(adj, mask);
      }
    }
    return false;
  };

  bool maximize = inst.problem == Problem::IndependentSet ||
                  inst.problem == Problem::MaxInducedForest;
  long best = -1;
  uint32_t best_mask = 0;
  for (uint64_t mask = 0; mask <= full; ++mask) {
    if (!feasible(static_cast<uint32_t>(mask))) continue;
    long size = __builtin_popcount(static_cast<uint32_t>(mask));
    if (best < 0 || (maximize ? size > best : size < best)) {
      best = size;
      best_mask = static_cast<uint32_t>(mask);
    }
  }

  SolveResult res;
  res.stats.method = "brute-force";
  if (best < 0) {
    res.feasible = false;
    return res;
  }
  res.optimum = best;
  for (int v = 0; v < n; ++v)
    if ((best_mask >> v) & 1) res.witness.push_back(v);
  if (inst.problem == Problem::SteinerTree && inst.budget >= 0 && res.optimum > inst.budget)
    res.feasible = false;
  return res;
}

}  // namespace fatgraph
