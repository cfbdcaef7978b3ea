#include "fatgraph/minor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fatgraph/errors.hpp"

namespace fatgraph {

namespace {

GridPoint emb(const GridPoint& floor, int h) {
  GridPoint p = floor;
  p.push_back(h);
  return p;
}

// Next-fit row packer for runs of consecutive cells in a (d-1)-dimensional
// sheet stack: runs go along axis 0, rows along axis 1, sheets along the
// remaining axes.
struct RowPacker {
  std::vector<int> sizes;  // floor box sizes
  GridPoint cursor;        // next free cell
  explicit RowPacker(std::vector<int> s) : sizes(std::move(s)), cursor(sizes.size(), 1) {}

  std::vector<GridPoint> place_run(int len) {
    if (cursor[0] + len - 1 > sizes[0]) advance_row();
    std::vector<GridPoint> run;
    for (int i = 0; i < len; ++i) {
      GridPoint p = cursor;
      p[0] = cursor[0] + i;
      run.push_back(std::move(p));
    }
    cursor[0] += len;
    return run;
  }

  void advance_row() {
    cursor[0] = 1;
    for (size_t a = 1; a < cursor.size(); ++a) {
      if (cursor[a] < sizes[a]) {
        ++cursor[a];
        return;
      }
      cursor[a] = 1;
    }
    throw std::logic_error("layout box too small");
  }
};

}  // namespace

MinorEmbedding embed_minor(const IntersectionGraph& g, unsigned d) {
  if (d < 3) throw unsupported_error("minor embedding needs dimension >= 3");
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 0) throw std::invalid_argument("isolated vertices are not embeddable");

  int m = g.edge_count();
  size_t df = d - 1;
  int max_deg = 0;
  for (int v = 0; v < g.n; ++v) max_deg = std::max(max_deg, g.degree(v));

  // Side length O(m^(1/(d-1))), padded for run and pair placement.
  int side = 2;
  while (true) {
    long cap = 1;
    for (size_t a = 0; a < df; ++a) cap *= side;
    if (cap >= 4L * m + 2L * g.n && side >= max_deg && side >= 2) break;
    ++side;
  }
  std::vector<int> sizes(df, side);

  // Bottom layer: one run of deg(v) cells per vertex, one slot per incident
  // edge in neighbor order.
  RowPacker bottom(sizes);
  std::vector<std::vector<GridPoint>> run_of(g.n);
  std::map<std::pair<int, int>, GridPoint> slot;  // (v, neighbor) -> cell of P_v
  for (int v = 0; v < g.n; ++v) {
    run_of[v] = bottom.place_run(g.degree(v));
    for (int i = 0; i < g.degree(v); ++i) slot[{v, g.adj[v][i]}] = run_of[v][i];
  }

  // Top layer: an adjacent cell pair per edge.
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (v > u) edges.emplace_back(u, v);
  RowPacker top(sizes);
  std::map<std::pair<int, int>, GridPoint> endpoint;  // (edge idx, side) -> cell
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    std::vector<GridPoint> pair_cells = top.place_run(2);
    endpoint[{e, 0}] = pair_cells[0];
    endpoint[{e, 1}] = pair_cells[1];
  }

  WiringInstance winst;
  winst.d = d;
  winst.n = sizes;
  std::vector<std::pair<int, int>> wire_owner;  // (vertex, edge idx)
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [u, v] = edges[e];
    winst.matching.emplace_back(slot.at({u, v}), endpoint.at({e, 0}));
    wire_owner.emplace_back(u, e);
    winst.matching.emplace_back(slot.at({v, u}), endpoint.at({e, 1}));
    wire_owner.emplace_back(v, e);
  }
  Wiring wiring = wire_matching(winst);

  MinorEmbedding out;
  out.d = d;
  out.box = wiring.box;
  out.box.push_back(wiring.height);
  out.edges = edges;
  out.branch_sets.assign(g.n, {});
  for (int v = 0; v < g.n; ++v)
    for (const GridPoint& cell : run_of[v]) out.branch_sets[v].push_back(emb(cell, 1));
  for (size_t w = 0; w < wiring.wires.size(); ++w) {
    int v = wire_owner[w].first;
    // Skip the first point: the bottom run already holds it.
    for (size_t s = 1; s < wiring.wires[w].points.size(); ++s)
      out.branch_sets[v].push_back(wiring.wires[w].points[s]);
  }
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    out.connectors.emplace_back(emb(endpoint.at({e, 0}), wiring.height),
                                emb(endpoint.at({e, 1}), wiring.height));
  return out;
}

std::vector<std::string> verify_minor_embedding(const MinorEmbedding& emb) {
  std::vector<std::string> violations;
  std::map<GridPoint, int> owner;
  for (int v = 0; v < static_cast<int>(emb.branch_sets.size()); ++v) {
    for (const GridPoint& p : emb.branch_sets[v]) {
      if (p.size() != emb.d) {
        violations.push_back("branch point with wrong dimension");
        continue;
      }
      for (size_t a = 0; a < p.size(); ++a)
        if (p[a] < 1 || p[a] > emb.box[a]) {
          violations.push_back("branch point outside the box");
          break;
        }
      auto [it, inserted] = owner.emplace(p, v);
      if (!inserted) violations.push_back("branch sets overlap");
    }
  }
  // Connectivity inside the lattice.
  for (int v = 0; v < static_cast<int>(emb.branch_sets.size()); ++v) {
    const auto& set = emb.branch_sets[v];
    if (set.empty()) {
      violations.push_back("empty branch set");
      continue;
    }
    std::set<GridPoint> members(set.begin(), set.end());
    std::vector<GridPoint> stack{set[0]};
    std::set<GridPoint> seen{set[0]};
    while (!stack.empty()) {
      GridPoint p = stack.back();
      stack.pop_back();
      for (size_t a = 0; a < p.size(); ++a)
        for (int dir : {-1, 1}) {
          GridPoint q = p;
          q[a] += dir;
          if (members.count(q) && !seen.count(q)) {
            seen.insert(q);
            stack.push_back(q);
          }
        }
    }
    if (seen.size() != members.size())
      violations.push_back("branch set " + std::to_string(v) + " is disconnected");
  }
  for (size_t e = 0; e < emb.connectors.size(); ++e) {
    const auto& [a, b] = emb.connectors[e];
    long dist = 0;
    for (size_t i = 0; i < a.size(); ++i) dist += std::abs(a[i] - b[i]);
    if (dist != 1) violations.push_back("connector is not a lattice edge");
    auto ia = owner.find(a), ib = owner.find(b);
    if (ia == owner.end() || ib == owner.end()) {
      violations.push_back("connector endpoint outside every branch set");
      continue;
    }
    if (ia->second == ib->second) violations.push_back("connector inside one branch set");
    if (std::make_pair(std::min(ia->second, ib->second),
                       std::max(ia->second, ib->second)) != emb.edges[e])
      violations.push_back("connector joins the wrong branch sets");
  }
  return violations;
}

IntersectionGraph contract_embedding(const MinorEmbedding& emb) {
  IntersectionGraph g;
  g.n = static_cast<int>(emb.branch_sets.size());
  g.adj.assign(g.n, {});
  for (const auto& [u, v] : emb.edges) g.add_edge(u, v);
  g.finalize();
  return g;
}

std::vector<uint64_t> canonical_form(const IntersectionGraph& g) {
  int n = g.n;
  if (n > 12) throw std::invalid_argument("canonical form limited to 12 vertices");
  std::vector<uint64_t> rows(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.adj[v]) rows[v] |= uint64_t{1} << w;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<uint64_t> best;
  do {
    std::vector<uint64_t> mapped(n, 0);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (rows[v] & (uint64_t{1} << w)) mapped[perm[v]] |= uint64_t{1} << perm[w];
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic_small(const IntersectionGraph& a, const IntersectionGraph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace fatgraph
