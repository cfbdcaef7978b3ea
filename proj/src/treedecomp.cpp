#include "fatgraph/treedecomp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fatgraph {

namespace {

struct DecompBuilder {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> edges;

  int add_bag(std::vector<int> bag) {
    bags.push_back(std::move(bag));
    return static_cast<int>(bags.size()) - 1;
  }
  void link(int a, int b) { edges.emplace_back(a, b); }
};

// Returns the root bag index of the subtree built for `sub` (sorted global
// contracted-node ids).
int build_rec(const ContractedGraph& gp, const SeparatorCallback& sep_fn,
              const Rational& base_weight, const std::vector<int>& sub, DecompBuilder& out) {
  Rational weight = 0;
  for (int v : sub) weight += gp.node_weights[v];
  if (weight <= base_weight || sub.size() == 1) return out.add_bag(sub);

  std::vector<int> sep = sep_fn(sub);
  std::sort(sep.begin(), sep.end());
  std::vector<int> rest;
  std::set_difference(sub.begin(), sub.end(), sep.begin(), sep.end(),
                      std::back_inserter(rest));
  if (rest.empty()) return out.add_bag(sub);

  IntersectionGraph induced = gp.graph.induced(rest);
  std::vector<std::vector<int>> comps = induced.components();
  if (sep.empty() && comps.size() == 1) return out.add_bag(sub);  // cannot split further

  std::vector<int> roots;
  for (const auto& comp_local : comps) {
    std::vector<int> comp;
    comp.reserve(comp_local.size());
    for (int idx : comp_local) comp.push_back(rest[idx]);
    std::sort(comp.begin(), comp.end());

    size_t first_bag = out.bags.size();
    int root = build_rec(gp, sep_fn, base_weight, comp, out);
    // Union the separator into every bag of the fresh subtree.
    for (size_t b = first_bag; b < out.bags.size(); ++b) {
      std::vector<int> merged;
      std::set_union(out.bags[b].begin(), out.bags[b].end(), sep.begin(), sep.end(),
                     std::back_inserter(merged));
      out.bags[b] = std::move(merged);
    }
    roots.push_back(root);
  }
  for (size_t i = 0; i + 1 < roots.size(); ++i) out.link(roots[i], roots[i + 1]);
  return roots[0];
}

Rational bag_weight(const std::vector<int>& bag, const ContractedGraph& gp) {
  Rational w = 0;
  for (int c : bag) w += gp.node_weights[c];
  return w;
}

}  // namespace

WeightedTreeDecomposition decompose_by_separator(const ContractedGraph& gp,
                                                 const SeparatorCallback& sep_fn,
                                                 const Rational& base_weight) {
  WeightedTreeDecomposition wtd;
  if (gp.node_count() == 0) {
    wtd.bags.push_back({});
    wtd.weighted_width = 0;
    return wtd;
  }
  DecompBuilder builder;
  // Decompose each connected component and chain the roots.
  IntersectionGraph whole = gp.graph;
  std::vector<std::vector<int>> comps = whole.components();
  std::vector<int> roots;
  for (const auto& comp : comps)
    roots.push_back(build_rec(gp, sep_fn, base_weight, comp, builder));
  for (size_t i = 0; i + 1 < roots.size(); ++i) builder.link(roots[i], roots[i + 1]);

  wtd.bags = std::move(builder.bags);
  wtd.tree_edges = std::move(builder.edges);
  wtd.weighted_width = 0;
  for (const auto& bag : wtd.bags)
    wtd.weighted_width = std::max(wtd.weighted_width, bag_weight(bag, gp));
  return wtd;
}

SeparatorCallback geometric_separator_callback(const KappaPartition& part,
                                               const ObjectSet& objs,
                                               const SeparatorOptions& opts) {
  return [&part, &objs, opts](const std::vector<int>& sub) -> std::vector<int> {
    if (sub.size() <= 1) return {};
    // Sub-instance over the member objects of the chosen classes.
    ObjectSet sub_objs;
    sub_objs.dimension = objs.dimension;
    KappaPartition sub_part;
    sub_part.classes.resize(sub.size());
    for (size_t c = 0; c < sub.size(); ++c) {
      for (int v : part.classes[sub[c]]) {
        FatObject o = objs.objects[v];
        o.id = sub_objs.size();
        sub_part.classes[c].push_back(o.id);
        sub_part.class_of.push_back(static_cast<int>(c));
        sub_objs.objects.push_back(std::move(o));
      }
      sub_part.contracted.class_sizes.push_back(
          static_cast<long>(part.classes[sub[c]].size()));
      sub_part.contracted.node_weights.push_back(part.contracted.node_weights[sub[c]]);
    }
    CliqueSeparator sep = separator_for_contraction(sub_part, sub_objs, opts);
    std::vector<int> global;
    for (const auto& clique : sep.cliques)
      for (int local : clique) global.push_back(sub[local]);
    std::sort(global.begin(), global.end());
    return global;
  };
}

IntersectionGraph blowup(const ContractedGraph& gp,
                         std::vector<std::vector<int>>* clique_of_node) {
  std::vector<std::vector<int>> cliques(gp.node_count());
  int total = 0;
  for (int c = 0; c < gp.node_count(); ++c) {
    long t = ceil_rational(gp.node_weights[c]).get_si();
    if (t < 1) t = 1;
    for (long i = 0; i < t; ++i) cliques[c].push_back(total++);
  }
  IntersectionGraph h;
  h.n = total;
  h.adj.assign(total, {});
  for (int c = 0; c < gp.node_count(); ++c) {
    for (size_t i = 0; i < cliques[c].size(); ++i)
      for (size_t j = i + 1; j < cliques[c].size(); ++j)
        h.add_edge(cliques[c][i], cliques[c][j]);
    for (int nb : gp.graph.adj[c]) {
      if (nb < c) continue;
      for (int u : cliques[c])
        for (int v : cliques[nb]) h.add_edge(u, v);
    }
  }
  h.finalize();
  if (clique_of_node) *clique_of_node = std::move(cliques);
  return h;
}

std::vector<int> min_fill_order(const IntersectionGraph& g) {
  int n = g.n;
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = std::set<int>(g.adj[v].begin(), g.adj[v].end());
  std::vector<char> gone(n, 0);
  std::vector<int> order;
  order.reserve(n);

  auto fill_count = [&](int v) {
    long fill = 0;
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (!adj[nb[i]].count(nb[j])) ++fill;
    return fill;
  };

  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long f = fill_count(v);
      if (best < 0 || f < best_fill) {
        best = v;
        best_fill = f;
      }
    }
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    for (int w : nb) adj[w].erase(best);
    adj[best].clear();
    gone[best] = 1;
    order.push_back(best);
  }
  return order;
}

WeightedTreeDecomposition decomposition_from_elimination(const IntersectionGraph& g,
                                                         const std::vector<int>& order) {
  int n = g.n;
  WeightedTreeDecomposition wtd;
  if (n == 0) {
    wtd.bags.push_back({});
    wtd.weighted_width = 0;
    return wtd;
  }
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = std::set<int>(g.adj[v].begin(), g.adj[v].end());

  // bag(v) = {v} + later-ordered neighbors in the filled graph; the bag of v
  // hangs off the bag of its earliest-eliminated later neighbor.
  std::vector<std::vector<int>> bags(n);
  std::vector<int> parent_vertex(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> later;
    for (int w : adj[v])
      if (position[w] > i) later.push_back(w);
    std::sort(later.begin(), later.end());
    bags[i] = later;
    bags[i].push_back(v);
    std::sort(bags[i].begin(), bags[i].end());
    if (!later.empty()) {
      int succ = later[0];
      for (int w : later)
        if (position[w] < position[succ]) succ = w;
      parent_vertex[i] = position[succ];
    }
    for (size_t a = 0; a < later.size(); ++a)
      for (size_t b = a + 1; b < later.size(); ++b) {
        adj[later[a]].insert(later[b]);
        adj[later[b]].insert(later[a]);
      }
  }
  wtd.bags = std::move(bags);
  for (int i = 0; i < n; ++i) {
    if (parent_vertex[i] >= 0)
      wtd.tree_edges.emplace_back(i, parent_vertex[i]);
    else if (i + 1 < n)
      wtd.tree_edges.emplace_back(i, i + 1);  // stitch forest components
  }
  long width = 0;
  for (const auto& bag : wtd.bags) width = std::max(width, static_cast<long>(bag.size()));
  wtd.weighted_width = Rational(width);
  return wtd;
}

WeightedTreeDecomposition decompose_by_blowup(const ContractedGraph& gp) {
  std::vector<std::vector<int>> cliques;
  IntersectionGraph h = blowup(gp, &cliques);
  WeightedTreeDecomposition tdh = decomposition_from_elimination(h, min_fill_order(h));

  WeightedTreeDecomposition out;
  out.tree_edges = tdh.tree_edges;
  out.bags.resize(tdh.node_count());
  for (int t = 0; t < tdh.node_count(); ++t) {
    const std::vector<int>& hb = tdh.bags[t];
    for (int c = 0; c < gp.node_count(); ++c) {
      bool all = true;
      for (int u : cliques[c])
        if (!std::binary_search(hb.begin(), hb.end(), u)) {
          all = false;
          break;
        }
      if (all) out.bags[t].push_back(c);
    }
  }
  out.weighted_width = 0;
  for (const auto& bag : out.bags)
    out.weighted_width = std::max(out.weighted_width, bag_weight(bag, gp));
  if (out.node_count() == 0) {
    out.bags.push_back({});
    out.weighted_width = 0;
  }
  return out;
}

namespace {

struct NiceBuilder {
  std::vector<NiceNode> nodes;
  const KappaPartition* part;

  int add(NiceNode node) {
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
  }

  // Chain of vertex introduces for one class on top of `below`.
  int introduce_class(int below, int cls) {
    int cur = below;
    for (int v : part->classes[cls]) {
      NiceNode nd;
      nd.kind = NodeKind::Introduce;
      nd.vertex = v;
      nd.child = cur;
      nd.bag = nodes[cur].bag;
      nd.bag.insert(std::lower_bound(nd.bag.begin(), nd.bag.end(), v), v);
      cur = add(std::move(nd));
    }
    return cur;
  }

  int forget_class(int below, int cls) {
    int cur = below;
    for (int v : part->classes[cls]) {
      NiceNode nd;
      nd.kind = NodeKind::Forget;
      nd.vertex = v;
      nd.child = cur;
      nd.bag = nodes[cur].bag;
      nd.bag.erase(std::lower_bound(nd.bag.begin(), nd.bag.end(), v));
      cur = add(std::move(nd));
    }
    return cur;
  }

  int leaf() {
    NiceNode nd;
    nd.kind = NodeKind::Leaf;
    return add(std::move(nd));
  }
};

}  // namespace

TraditionalTreeDecomposition to_traditional(const WeightedTreeDecomposition& wtd,
                                            const KappaPartition& part) {
  int nb = wtd.node_count();
  std::vector<std::vector<int>> tree(nb);
  for (auto [a, b] : wtd.tree_edges) {
    tree[a].push_back(b);
    tree[b].push_back(a);
  }

  NiceBuilder builder;
  builder.part = &part;

  // Iterative rooted DFS at bag 0; children are transformed to the parent's
  // class bag by forget-then-introduce chains, then joined pairwise.
  std::vector<int> order;
  std::vector<int> parent(nb, -1);
  {
    std::vector<int> stack{0};
    std::vector<char> seen(nb, 0);
    seen[0] = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      order.push_back(t);
      for (int c : tree[t])
        if (!seen[c]) {
          seen[c] = 1;
          parent[c] = t;
          stack.push_back(c);
        }
    }
  }

  std::vector<int> built(nb, -1);  // nice node whose bag equals the class bag of t
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int t = *it;
    std::vector<int> kids;
    for (int c : tree[t])
      if (parent[c] == t) kids.push_back(c);

    std::vector<int> tops;
    for (int c : kids) {
      int cur = built[c];
      std::vector<int> drop, gain;
      std::set_difference(wtd.bags[c].begin(), wtd.bags[c].end(), wtd.bags[t].begin(),
                          wtd.bags[t].end(), std::back_inserter(drop));
      std::set_difference(wtd.bags[t].begin(), wtd.bags[t].end(), wtd.bags[c].begin(),
                          wtd.bags[c].end(), std::back_inserter(gain));
      for (int cls : drop) cur = builder.forget_class(cur, cls);
      for (int cls : gain) cur = builder.introduce_class(cur, cls);
      tops.push_back(cur);
    }
    if (tops.empty()) {
      int cur = builder.leaf();
      for (int cls : wtd.bags[t]) cur = builder.introduce_class(cur, cls);
      built[t] = cur;
    } else {
      int cur = tops[0];
      for (size_t i = 1; i < tops.size(); ++i) {
        NiceNode join;
        join.kind = NodeKind::Join;
        join.child = cur;
        join.child2 = tops[i];
        join.bag = builder.nodes[cur].bag;
        cur = builder.add(std::move(join));
      }
      built[t] = cur;
    }
  }

  int top = built[order[0]];
  for (int cls : wtd.bags[order[0]]) top = builder.forget_class(top, cls);

  TraditionalTreeDecomposition trad;
  trad.nodes = std::move(builder.nodes);
  trad.root = top;
  return trad;
}

std::vector<std::string> validate_decomposition(const WeightedTreeDecomposition& wtd,
                                                const ContractedGraph& gp) {
  std::vector<std::string> violations;
  int nb = wtd.node_count();
  if (nb == 0) {
    violations.push_back("decomposition has no bags");
    return violations;
  }
  // Tree shape: connected and acyclic.
  if (static_cast<int>(wtd.tree_edges.size()) != nb - 1)
    violations.push_back("tree edge count is not bags-1");
  {
    std::vector<std::vector<int>> adj(nb);
    for (auto [a, b] : wtd.tree_edges) {
      if (a < 0 || b < 0 || a >= nb || b >= nb) {
        violations.push_back("tree edge out of range");
        return violations;
      }
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<char> seen(nb, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (reached != nb) violations.push_back("decomposition tree is disconnected");
  }
  // Vertex coverage and occurrence connectivity.
  int n = gp.node_count();
  std::vector<std::vector<int>> holding(n);
  for (int t = 0; t < nb; ++t)
    for (int c : wtd.bags[t]) {
      if (c < 0 || c >= n) {
        violations.push_back("bag entry out of range");
        return violations;
      }
      holding[c].push_back(t);
    }
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : wtd.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (int c = 0; c < n; ++c) {
    if (holding[c].empty()) {
      violations.push_back("vertex " + std::to_string(c) + " appears in no bag");
      continue;
    }
    std::set<int> members(holding[c].begin(), holding[c].end());
    std::vector<int> stack{holding[c][0]};
    std::set<int> seen{holding[c][0]};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int w : adj[t])
        if (members.count(w) && !seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    if (seen.size() != members.size())
      violations.push_back("occurrence set of vertex " + std::to_string(c) +
                           " is not connected");
  }
  // Edge coverage.
  for (int u = 0; u < n; ++u)
    for (int v : gp.graph.adj[u]) {
      if (v < u) continue;
      bool covered = false;
      for (int t = 0; t < nb && !covered; ++t)
        covered = std::binary_search(wtd.bags[t].begin(), wtd.bags[t].end(), u) &&
                  std::binary_search(wtd.bags[t].begin(), wtd.bags[t].end(), v);
      if (!covered)
        violations.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") not covered by any bag");
    }
  // Stored width.
  Rational w = 0;
  for (const auto& bag : wtd.bags) w = std::max(w, bag_weight(bag, gp));
  if (w != wtd.weighted_width) violations.push_back("stored weighted width is incorrect");
  return violations;
}

namespace {

void euler_ranges(const TraditionalTreeDecomposition& trad, std::vector<int>& tin,
                  std::vector<int>& tout) {
  int n = trad.node_count();
  tin.assign(n, -1);
  tout.assign(n, -1);
  int clock = 0;
  // Iterative postorder-ish traversal from the root.
  std::vector<std::pair<int, int>> stack{{trad.root, 0}};
  while (!stack.empty()) {
    auto [t, stage] = stack.back();
    if (stage == 0) {
      stack.back().second = 1;
      tin[t] = clock++;
      const NiceNode& nd = trad.nodes[t];
      if (nd.child2 >= 0) stack.push_back({nd.child2, 0});
      if (nd.child >= 0) stack.push_back({nd.child, 0});
    } else {
      tout[t] = clock++;
      stack.pop_back();
    }
  }
}

}  // namespace

std::vector<std::string> validate_traditional(const TraditionalTreeDecomposition& trad,
                                              const IntersectionGraph& g,
                                              const KappaPartition* part) {
  std::vector<std::string> violations;
  if (trad.root < 0 || trad.root >= trad.node_count()) {
    violations.push_back("missing root");
    return violations;
  }
  if (!trad.nodes[trad.root].bag.empty()) violations.push_back("root bag not empty");

  std::vector<int> forget_node(g.n, -1);
  std::vector<char> introduced(g.n, 0);
  for (int t = 0; t < trad.node_count(); ++t) {
    const NiceNode& nd = trad.nodes[t];
    switch (nd.kind) {
      case NodeKind::Leaf:
        if (!nd.bag.empty()) violations.push_back("leaf bag not empty");
        if (nd.child >= 0) violations.push_back("leaf with child");
        break;
      case NodeKind::Introduce: {
        if (nd.child < 0) {
          violations.push_back("introduce without child");
          break;
        }
        std::vector<int> expect = trad.nodes[nd.child].bag;
        expect.insert(std::lower_bound(expect.begin(), expect.end(), nd.vertex), nd.vertex);
        if (expect != nd.bag) violations.push_back("introduce bag mismatch");
        introduced[nd.vertex] = 1;
        break;
      }
      case NodeKind::Forget: {
        if (nd.child < 0) {
          violations.push_back("forget without child");
          break;
        }
        std::vector<int> expect = trad.nodes[nd.child].bag;
        auto it = std::lower_bound(expect.begin(), expect.end(), nd.vertex);
        if (it == expect.end() || *it != nd.vertex) {
          violations.push_back("forget of vertex not in child bag");
          break;
        }
        expect.erase(it);
        if (expect != nd.bag) violations.push_back("forget bag mismatch");
        if (forget_node[nd.vertex] != -1)
          violations.push_back("vertex forgotten twice: " + std::to_string(nd.vertex));
        forget_node[nd.vertex] = t;
        break;
      }
      case NodeKind::Join:
        if (nd.child < 0 || nd.child2 < 0) {
          violations.push_back("join without two children");
          break;
        }
        if (trad.nodes[nd.child].bag != nd.bag || trad.nodes[nd.child2].bag != nd.bag)
          violations.push_back("join bags differ");
        break;
    }
  }
  for (int v = 0; v < g.n; ++v) {
    if (!introduced[v]) violations.push_back("vertex never introduced: " + std::to_string(v));
    if (forget_node[v] < 0) violations.push_back("vertex never forgotten: " + std::to_string(v));
  }
  if (!violations.empty()) return violations;

  // Edge coverage.
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) {
      if (v < u) continue;
      bool covered = false;
      for (int t = 0; t < trad.node_count() && !covered; ++t) {
        const auto& bag = trad.nodes[t].bag;
        covered = std::binary_search(bag.begin(), bag.end(), u) &&
                  std::binary_search(bag.begin(), bag.end(), v);
      }
      if (!covered)
        violations.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") not covered");
    }

  // Occurrence connectivity: every node holding v with a parent also holding
  // v, except exactly one (the child of the forget node).
  std::vector<int> parent(trad.node_count(), -1);
  for (int t = 0; t < trad.node_count(); ++t) {
    if (trad.nodes[t].child >= 0) parent[trad.nodes[t].child] = t;
    if (trad.nodes[t].child2 >= 0) parent[trad.nodes[t].child2] = t;
  }
  for (int v = 0; v < g.n; ++v) {
    int tops = 0;
    for (int t = 0; t < trad.node_count(); ++t) {
      const auto& bag = trad.nodes[t].bag;
      if (!std::binary_search(bag.begin(), bag.end(), v)) continue;
      int p = parent[t];
      bool parent_holds =
          p >= 0 && std::binary_search(trad.nodes[p].bag.begin(), trad.nodes[p].bag.end(), v);
      if (!parent_holds) ++tops;
    }
    if (tops != 1)
      violations.push_back("occurrence set of vertex " + std::to_string(v) +
                           " is not a subtree");
  }

  // Class contiguity: when a member is forgotten, every other member is
  // either still in the bag below or was forgotten inside that subtree.
  if (part) {
    std::vector<int> tin, tout;
    euler_ranges(trad, tin, tout);
    for (int v = 0; v < g.n; ++v) {
      int t = forget_node[v];
      const auto& below = trad.nodes[trad.nodes[t].child].bag;
      for (int w : part->classes[part->class_of[v]]) {
        if (w == v) continue;
        bool in_bag = std::binary_search(below.begin(), below.end(), w);
        bool forgotten_below = tin[forget_node[w]] > tin[t] && tout[forget_node[w]] < tout[t];
        if (!in_bag && !forgotten_below) {
          violations.push_back("class of vertex " + std::to_string(v) +
                               " is not contiguous");
          break;
        }
      }
    }
  }
  return violations;
}

Rational traditional_weighted_width(const TraditionalTreeDecomposition& trad,
                                    const KappaPartition& part) {
  Rational best = 0;
  for (const NiceNode& nd : trad.nodes) {
    std::set<int> classes;
    for (int v : nd.bag) classes.insert(part.class_of[v]);
    Rational w = 0;
    for (int c : classes) w += part.contracted.node_weights[c];
    best = std::max(best, w);
  }
  return best;
}

}  // namespace fatgraph
