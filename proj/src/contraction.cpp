#include "fatgraph/contraction.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace fatgraph {

int ContractedGraph::max_degree() const {
  int m = 0;
  for (int v = 0; v < graph.n; ++v) m = std::max(m, graph.degree(v));
  return m;
}

std::vector<int> greedy_mis(const IntersectionGraph& g) {
  std::vector<char> blocked(g.n, 0);
  std::vector<int> mis;
  for (int v = 0; v < g.n; ++v) {
    if (blocked[v]) continue;
    mis.push_back(v);
    for (int w : g.adj[v]) blocked[w] = 1;
  }
  return mis;
}

namespace {

// Repeatedly extract a maximal clique from the class by greedy extension in
// id order.
std::vector<std::vector<int>> greedy_clique_cover(const IntersectionGraph& g,
                                                  const std::vector<int>& cls) {
  std::vector<std::vector<int>> cover;
  std::vector<int> remaining = cls;  // sorted
  while (!remaining.empty()) {
    std::vector<int> clique{remaining[0]};
    for (size_t i = 1; i < remaining.size(); ++i) {
      int cand = remaining[i];
      bool ok = true;
      for (int m : clique)
        if (!g.adjacent(cand, m)) {
          ok = false;
          break;
        }
      if (ok) clique.push_back(cand);
    }
    std::vector<int> rest;
    size_t ci = 0;
    for (int v : remaining) {
      if (ci < clique.size() && clique[ci] == v)
        ++ci;
      else
        rest.push_back(v);
    }
    remaining = std::move(rest);
    cover.push_back(std::move(clique));
  }
  return cover;
}

}  // namespace

ContractedGraph contract(const IntersectionGraph& g,
                         const std::vector<std::vector<int>>& classes,
                         const WeightFunction& gamma) {
  std::vector<int> class_of(g.n, -1);
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    for (int v : classes[c]) {
      if (v < 0 || v >= g.n || class_of[v] != -1)
        throw std::invalid_argument("classes do not partition the vertex set");
      class_of[v] = c;
    }
  for (int v = 0; v < g.n; ++v)
    if (class_of[v] == -1)
      throw std::invalid_argument("classes do not partition the vertex set");

  ContractedGraph out;
  out.graph.n = static_cast<int>(classes.size());
  out.graph.adj.assign(out.graph.n, {});
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj[v]) {
      int cv = class_of[v], cw = class_of[w];
      if (cv != cw) out.graph.adj[cv].push_back(cw);
    }
  out.graph.finalize();
  for (const auto& cls : classes) {
    out.class_sizes.push_back(static_cast<long>(cls.size()));
    out.node_weights.push_back(gamma(static_cast<long>(cls.size())));
  }
  return out;
}

KappaPartition build_kappa_partition(const IntersectionGraph& g, const WeightFunction& gamma) {
  KappaPartition part;
  std::vector<int> mis = greedy_mis(g);
  std::vector<int> mis_index(g.n, -1);
  for (int i = 0; i < static_cast<int>(mis.size()); ++i) mis_index[mis[i]] = i;

  part.classes.assign(mis.size(), {});
  part.class_of.assign(g.n, -1);
  for (int i = 0; i < static_cast<int>(mis.size()); ++i) {
    part.classes[i].push_back(mis[i]);
    part.class_of[mis[i]] = i;
  }
  for (int v = 0; v < g.n; ++v) {
    if (mis_index[v] >= 0) continue;
    int target = -1;
    for (int w : g.adj[v])  // neighbors sorted: first MIS neighbor has lowest id
      if (mis_index[w] >= 0) {
        target = mis_index[w];
        break;
      }
    if (target < 0) throw std::logic_error("maximal independent set missed a vertex");
    part.classes[target].push_back(v);
    part.class_of[v] = target;
  }
  for (auto& cls : part.classes) std::sort(cls.begin(), cls.end());

  for (const auto& cls : part.classes) {
    part.clique_covers.push_back(greedy_clique_cover(g, cls));
    part.kappa_hat = std::max(part.kappa_hat, static_cast<int>(part.clique_covers.back().size()));
  }
  part.contracted = contract(g, part.classes, gamma);
  part.delta_hat = part.contracted.max_degree();
  return part;
}

std::vector<int> classes_within_distance(const ContractedGraph& gp, int cls, int r) {
  std::vector<int> dist = gp.graph.bfs_distances(cls);
  std::vector<int> out;
  for (int c = 0; c < gp.graph.n; ++c)
    if (dist[c] >= 0 && dist[c] <= r) out.push_back(c);
  return out;
}

}  // namespace fatgraph
