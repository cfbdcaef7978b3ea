#include "fatgraph/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "fatgraph/rankbased.hpp"

namespace fatgraph {

Problem problem_from_name(const std::string& name) {
  if (name == "is") return Problem::IndependentSet;
  if (name == "vc") return Problem::VertexCover;
  if (name == "ds" || name == "rds") return Problem::DominatingSet;
  if (name == "steiner") return Problem::SteinerTree;
  if (name == "mif") return Problem::MaxInducedForest;
  if (name == "fvs") return Problem::FeedbackVertexSet;
  if (name == "cvc") return Problem::ConnectedVertexCover;
  throw std::invalid_argument("unknown problem: " + name);
}

std::string problem_name(Problem p) {
  switch (p) {
    case Problem::IndependentSet: return "is";
    case Problem::VertexCover: return "vc";
    case Problem::DominatingSet: return "ds";
    case Problem::SteinerTree: return "steiner";
    case Problem::MaxInducedForest: return "mif";
    case Problem::FeedbackVertexSet: return "fvs";
    case Problem::ConnectedVertexCover: return "cvc";
  }
  throw std::logic_error("unreachable");
}

void ProblemInstance::validate() const {
  if (r < 1) throw std::invalid_argument("domination radius must be >= 1");
  for (int t : terminals)
    if (t < 0 || t >= graph.n) throw std::invalid_argument("terminal out of range");
  if (problem == Problem::SteinerTree && terminals.empty())
    throw std::invalid_argument("steiner tree needs at least one terminal");
}

namespace {

// ---------------------------------------------------------------------------
// Shared DP plumbing
// ---------------------------------------------------------------------------

using Key = std::vector<uint8_t>;

struct KeyHash {
  size_t operator()(const Key& k) const {
    size_t h = 1469598103934665603ull;
    for (uint8_t b : k) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct WitNode {
  int v;
  std::shared_ptr<const WitNode> next;
};
using WitPtr = std::shared_ptr<const WitNode>;

WitPtr wit_push(WitPtr tail, int v) { return std::make_shared<const WitNode>(WitNode{v, tail}); }

WitPtr wit_concat(WitPtr a, WitPtr b) {
  if (!a) return b;
  std::vector<int> items;
  for (const WitNode* p = a.get(); p; p = p->next.get()) items.push_back(p->v);
  WitPtr out = b;
  for (auto it = items.rbegin(); it != items.rend(); ++it) out = wit_push(out, *it);
  return out;
}

std::vector<int> wit_collect(const WitPtr& w) {
  std::vector<int> out;
  for (const WitNode* p = w.get(); p; p = p->next.get()) out.push_back(p->v);
  std::sort(out.begin(), out.end());
  return out;
}

struct Val {
  long value = 0;
  WitPtr wit;
};

using Table = std::unordered_map<Key, Val, KeyHash>;

void upsert(Table& t, Key key, long value, WitPtr wit, bool maximize) {
  auto [it, inserted] = t.try_emplace(std::move(key), Val{value, std::move(wit)});
  if (inserted) return;
  if (maximize ? value > it->second.value : value < it->second.value)
    it->second = Val{value, wit};
}

int bag_position(const std::vector<int>& bag, int v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

Key erase_at(const Key& k, int pos) {
  Key out;
  out.reserve(k.size() - 1);
  for (int i = 0; i < static_cast<int>(k.size()); ++i)
    if (i != pos) out.push_back(k[i]);
  return out;
}

Key insert_at(const Key& k, int pos, uint8_t value) {
  Key out;
  out.reserve(k.size() + 1);
  for (int i = 0; i < pos; ++i) out.push_back(k[i]);
  out.push_back(value);
  for (int i = pos; i < static_cast<int>(k.size()); ++i) out.push_back(k[i]);
  return out;
}

struct DpContext {
  const TraditionalTreeDecomposition* trad = nullptr;
  const IntersectionGraph* g = nullptr;
  const KappaPartition* part = nullptr;
  std::vector<int> clique_of;  // vertex -> global cover-clique id
  bool prune = true;
  long class_cap = -1;
  long peak_states = 0;

  const std::vector<int>& bag(int t) const { return trad->nodes[t].bag; }
  const std::vector<int>& child_bag(int t) const {
    return trad->nodes[trad->nodes[t].child].bag;
  }
};

DpContext make_context(const TraditionalTreeDecomposition& trad, const IntersectionGraph& g,
                       const KappaPartition& part) {
  DpContext ctx;
  ctx.trad = &trad;
  ctx.g = &g;
  ctx.part = &part;
  ctx.clique_of.assign(g.n, -1);
  int next = 0;
  for (const auto& cover : part.clique_covers)
    for (const auto& clique : cover) {
      for (int v : clique) ctx.clique_of[v] = next;
      ++next;
    }
  return ctx;
}

// Runs the per-node handlers bottom-up; node indices are already topological
// (children precede parents in to_traditional's output).
template <class Handler>
Table run_dp(DpContext& ctx, Handler&& h) {
  const auto& nodes = ctx.trad->nodes;
  std::vector<Table> tables(nodes.size());
  for (int t = 0; t < static_cast<int>(nodes.size()); ++t) {
    const NiceNode& nd = nodes[t];
    switch (nd.kind) {
      case NodeKind::Leaf:
        tables[t] = h.leaf(t);
        break;
      case NodeKind::Introduce:
        tables[t] = h.introduce(t, tables[nd.child]);
        tables[nd.child] = Table();
        break;
      case NodeKind::Forget:
        tables[t] = h.forget(t, tables[nd.child]);
        tables[nd.child] = Table();
        break;
      case NodeKind::Join:
        tables[t] = h.join(t, tables[nd.child], tables[nd.child2]);
        tables[nd.child] = Table();
        tables[nd.child2] = Table();
        break;
    }
    h.post(t, tables[t]);
    ctx.peak_states = std::max(ctx.peak_states, static_cast<long>(tables[t].size()));
  }
  return tables[ctx.trad->root];
}

// ---------------------------------------------------------------------------
// Independent set
// ---------------------------------------------------------------------------

struct IsHandler {
  DpContext& ctx;

  Table leaf(int) {
    Table t;
    t.emplace(Key{}, Val{});
    return t;
  }

  Table introduce(int t, const Table& child) {
    const NiceNode& nd = ctx.trad->nodes[t];
    const std::vector<int>& cb = ctx.child_bag(t);
    int pos = bag_position(nd.bag, nd.vertex);
    Table out;
    for (const auto& [key, val] : child) {
      upsert(out, insert_at(key, pos, 0), val.value, val.wit, true);
      bool independent = true;
      for (int i = 0; i < static_cast<int>(cb.size()); ++i)
        if (key[i] && ctx.g->adjacent(cb[i], nd.vertex)) {
          independent = false;
          break;
        }
      if (independent) upsert(out, insert_at(key, pos, 1), val.value, val.wit, true);
    }
    return out;
  }

  Table forget(int t, const Table& child) {
    const NiceNode& nd = ctx.trad->nodes[t];
    int pos = bag_position(ctx.child_bag(t), nd.vertex);
    Table out;
    for (const auto& [key, val] : child) {
      long value = val.value;
      WitPtr wit = val.wit;
      if (key[pos]) {
        ++value;
        wit = wit_push(wit, nd.vertex);
      }
      upsert(out, erase_at(key, pos), value, std::move(wit), true);
    }
    return out;
  }

  Table join(int, const Table& left, const Table& right) {
    Table out;
    for (const auto& [key, val] : left) {
      auto it = right.find(key);
      if (it == right.end()) continue;
      upsert(out, key, val.value + it->second.value, wit_concat(val.wit, it->second.wit), true);
    }
    return out;
  }

  void post(int, Table&) {}
};

// ---------------------------------------------------------------------------
// r-dominating set: labels are distance certificates. Byte code per vertex:
// 0 selected; 2i-1 at distance i with the neighbor condition already
// witnessed; 2i promised. A vertex may be forgotten only in a witnessed
// state.
// ---------------------------------------------------------------------------

struct DsHandler {
  DpContext& ctx;
  int r;

  static int delta_of(uint8_t code) { return code == 0 ? 0 : (code + 1) / 2; }
  static bool satisfied(uint8_t code) { return code == 0 || (code % 2 == 1); }
  static uint8_t encode(int delta, bool sat) {
    return delta == 0 ? 0 : static_cast<uint8_t>(2 * delta - (sat ? 1 : 0));
  }

  Table leaf(int) {
    Table t;
    t.emplace(Key{}, Val{});
    return t;
  }

  Table introduce(int t, const Table& child) {
    const NiceNode& nd = ctx.trad->nodes[t];
    const std::vector<int>& cb = ctx.child_bag(t);
    int pos = bag_position(nd.bag, nd.vertex);
    int v = nd.vertex;
    std::vector<int> nbr;  // positions in child bag adjacent to v
    for (int i = 0; i < static_cast<int>(cb.size()); ++i)
      if (ctx.g->adjacent(cb[i], v)) nbr.push_back(i);

    Table out;
    for (const auto& [key, val] : child) {
      for (int delta = 0; delta <= r; ++delta) {
        if (delta == 0 && ctx.prune && ctx.class_cap >= 0) {
          long in_class = 1;
          for (int i = 0; i < static_cast<int>(cb.size()); ++i)
            if (key[i] == 0 && ctx.part->class_of[cb[i]] == ctx.part->class_of[v]) ++in_class;
          if (in_class > ctx.class_cap) continue;
        }
        Key k = key;
        bool sat = delta == 0;
        for (int i : nbr) {
          int du = delta_of(k[i]);
          if (delta <= du - 1) k[i] = encode(du, true);
          if (du <= delta - 1) sat = true;
        }
        upsert(out, insert_at(k, pos, encode(delta, sat)), val.value, val.wit, false);
      }
    }
    return out;
  }

  Table forget(int t, const Table& child) {
    const NiceNode& nd = ctx.trad->nodes[t];
    int pos = bag_position(ctx.child_bag(t), nd.vertex);
    Table out;
    for (const auto& [key, val] : child) {
      if (!satisfied(key[pos])) continue;
      long value = val.value;
      WitPtr wit = val.wit;
      if (key[pos] == 0) {
        ++value;
        wit = wit_push(wit, nd.vertex);
      }
      upsert(out, erase_at(key, pos), value, std::move(wit), false);
    }
    return out;
  }

  Table join(int, const Table& left, const Table& right) {
    // Distance labels must agree; witness flags combine by OR.
    auto project = [](const Key& k) {
      Key p(k.size());
      for (size_t i = 0; i < k.size(); ++i) p[i] = static_cast<uint8_t>(delta_of(k[i]));
      return p;
    };
    std::unordered_map<Key, std::vector<const std::pair<const Key, Val>*>, KeyHash> rows;
    for (const auto& entry : right) rows[project(entry.first)].push_back(&entry);
    Table out;
    for (const auto& [key, val] : left) {
      auto it = rows.find(project(key));
      if (it == rows.end()) continue;
      for (const auto* rhs : it->second) {
        Key combined(key.size());
        for (size_t i = 0; i < key.size(); ++i) {
          int delta = delta_of(key[i]);
          bool sat = satisfied(key[i]) || satisfied(rhs->first[i]);
          combined[i] = encode(delta, sat);
        }
        upsert(out, std::move(combined), val.value + rhs->second.value,
               wit_concat(val.wit, rhs->second.wit), false);
      }
    }
    return out;
  }

  void post(int, Table&) {}
};

// ---------------------------------------------------------------------------
// Connectivity solvers: a key holds one byte per bag position (0 unselected,
// else block label + 1 in canonical order over selected positions), an extra
// v0 byte for the induced-forest DP, and a trailing closed byte for the
// solvers that seal a finished component. Edges are processed at the forget
// node of their first-forgotten endpoint, so each induced edge is glued
// exactly once.
// ---------------------------------------------------------------------------

struct PartitionCodec {
  int bag_size = 0;
  bool has_v0 = false;
  bool has_closed = false;

  size_t label_bytes() const { return bag_size + (has_v0 ? 1 : 0); }

  SetPartition extract(const Key& k) const {
    std::vector<int> block_of;
    for (size_t i = 0; i < label_bytes(); ++i)
      if (k[i]) block_of.push_back(k[i] - 1);
    return canonical_partition(block_of);
  }

  // Rank of a selected byte index among selected positions.
  int rank_of(const Key& k, int byte_index) const {
    int rank = 0;
    for (int i = 0; i < byte_index; ++i)
      if (k[i]) ++rank;
    return rank;
  }

  void write(Key& k, const SetPartition& p) const {
    size_t j = 0;
    for (size_t i = 0; i < label_bytes(); ++i)
      if (k[i]) k[i] = static_cast<uint8_t>(p.labels[j++] + 1);
  }

  Key mask_of(const Key& k) const {
    Key m(k.size());
    for (size_t i = 0; i < label_bytes(); ++i) m[i] = k[i] ? 1 : 0;
    for (size_t i = label_bytes(); i < k.size(); ++i) m[i] = k[i];
    return m;
  }
};

// Applies representative-set reduction per (mask, extra-grouping) bucket.
template <class GroupKeyFn>
void reduce_table(Table& table, const PartitionCodec& codec, bool maximize,
                  GroupKeyFn&& group_key) {
  std::map<std::pair<Key, long>, std::vector<std::pair<Key, Val>>> groups;
  for (auto& [key, val] : table)
    groups[{codec.mask_of(key), group_key(key)}].emplace_back(key, val);
  Table out;
  for (auto& [gk, entries] : groups) {
    unsigned u = 0;
    for (size_t i = 0; i < codec.label_bytes(); ++i) u += entries[0].first[i] ? 1 : 0;
    if (u == 0 || entries.size() <= 1) {
      for (auto& [k, v] : entries) upsert(out, std::move(k), v.value, std::move(v.wit), maximize);
      continue;
    }
    std::vector<std::pair<SetPartition, long>> rows;
    rows.reserve(entries.size());
    for (const auto& [k, v] : entries) rows.emplace_back(codec.extract(k), v.value);
    for (size_t idx : reduce_indices(rows, u, maximize)) {
      auto& [k, v] = entries[idx];
      upsert(out, std::move(k), v.value, std::move(v.wit), maximize);
    }
  }
  table = std::move(out);
}

struct SteinerHandler {
  DpContext& ctx;
  std::vector<char> is_terminal;
  bool cover_mode = false;  // connected vertex cover variant

  PartitionCodec codec_at(int t) const {
    PartitionCodec c;
    c.bag_size = static_cast<int>(ctx.bag(t).size());
    c.has_closed = true;
    return c;
  }

  Table leaf(int) {
    Table t;
    t.emplace(Key{0}, Val{});  // closed byte only
    return t;
  }

  Table introduce(int t, const Table& child) {
    const NiceNode& nd = ctx.trad->nodes[t];
    const std::vector<int>& cb = ctx.child_bag(t);
    int pos = bag_position(nd.bag, nd.vertex);
    int v = nd.vertex;
    PartitionCodec codec = codec_at(t);
    PartitionCodec child_codec;
    child_codec.bag_size = static_cast<int>(cb.size());
    child_codec.has_closed = true;

    Table out;
    for (const auto& [key, val] : child) {
      uint8_t closed = key.back();
      // Skip: not allowed for terminals; in cover mode at most one
      // unselected vertex per cover clique (the complement is independent).
      bool may_skip = !(!cover_mode && is_terminal[v]);
      if (cover_mode && ctx.prune) {
        for (int i = 0; i < static_cast<int>(cb.size()); ++i)
          if (key[i] == 0 && ctx.clique_of[cb[i]] == ctx.clique_of[v]) {
            may_skip = false;
            break;
          }
      }
      if (may_skip) upsert(out, insert_at(key, pos, 0), val.value, val.wit, false);

      if (closed) continue;  // the solution component is sealed
      if (!cover_mode && ctx.prune && ctx.class_cap >= 0 && !is_terminal[v]) {
        long in_class = 1;
        for (int i = 0; i < static_cast<int>(cb.size()); ++i)
          if (key[i] && !is_terminal[cb[i]] &&
              ctx.part->class_of[cb[i]] == ctx.part->class_of[v])
            ++in_class;
        if (in_class > ctx.class_cap) continue;
      }
      SetPartition p = child_codec.extract(key);
      int rank = child_codec.rank_of(key, pos);  // selected positions before pos
      SetPartition grown = insert_element(p, rank);
      Key k = insert_at(key, pos, 1);
      codec.write(k, grown);
      upsert(out, std::move(k), val.value, val.wit, false);
    }
    return out;
  }

  Table forget(int t, const Table& child) {
    const NiceNode& nd = ctx.trad->nodes[t];
    const std::vector<int>& cb = ctx.child_bag(t);
    int pos = bag_position(cb, nd.vertex);
    int v = nd.vertex;
    PartitionCodec child_codec;
    child_codec.bag_size = static_cast<int>(cb.size());
    child_codec.has_closed = true;
    std::vector<int> nbr;
    for (int i = 0; i < static_cast<int>(cb.size()); ++i)
      if (i != pos && ctx.g->adjacent(cb[i], v)) nbr.push_back(i);

    Table out;
    for (const auto& [key, val] : child) {
      if (key[pos] == 0) {
        if (cover_mode) {
          bool uncovered = false;
          for (int i : nbr)
            if (key[i] == 0) {
              uncovered = true;
              break;
            }
          if (uncovered) continue;
        }
        upsert(out, erase_at(key, pos), val.value, val.wit, false);
        continue;
      }
      SetPartition p = child_codec.extract(key);
      int rank = child_codec.rank_of(key, pos);
      for (int i : nbr)
        if (key[i]) p = glue(p, rank, child_codec.rank_of(key, i));
      // Count the members of v's block.
      int block_members = 0;
      for (unsigned e = 0; e < p.size(); ++e)
        if (p.labels[e] == p.labels[rank]) ++block_members;
      uint8_t closed = key.back();
      long value = val.value + 1;
      WitPtr wit = wit_push(val.wit, v);
      if (block_members == 1) {
        if (p.block_count() > 1) continue;  // sealed apart from open components
        Key k = erase_at(key, pos);
        k.back() = 1;  // the whole solution closes here
        upsert(out, std::move(k), value, std::move(wit), false);
      } else {
        SetPartition rest = *project(p, rank, false);
        Key k = erase_at(key, pos);
        PartitionCodec codec = codec_at(t);
        codec.write(k, rest);
        k.back() = closed;
        upsert(out, std::move(k), value, std::move(wit), false);
      }
    }
    return out;
  }

  Table join(int t, const Table& left, const Table& right) {
    PartitionCodec codec = codec_at(t);
    std::unordered_map<Key, std::vector<const std::pair<const Key, Val>*>, KeyHash> rows;
    for (const auto& entry : right) {
      Key m = codec.mask_of(entry.first);
      m.back() = 0;  // group ignores closed
      rows[std::move(m)].push_back(&entry);
    }
    Table out;
    for (const auto& [key, val] : left) {
      Key m = codec.mask_of(key);
      m.back() = 0;
      auto it = rows.find(m);
      if (it == rows.end()) continue;
      uint8_t c1 = key.back();
      SetPartition p1 = codec.extract(key);
      for (const auto* rhs : it->second) {
        uint8_t c2 = rhs->first.back();
        if (c1 && c2) continue;  // two sealed components cannot merge
        SetPartition joined = fatgraph::join(p1, codec.extract(rhs->first));
        Key k = key;
        codec.write(k, joined);
        k.back() = c1 | c2;
        upsert(out, std::move(k), val.value + rhs->second.value,
               wit_concat(val.wit, rhs->second.wit), false);
      }
    }
    return out;
  }

  void post(int t, Table& table) {
    PartitionCodec codec = codec_at(t);
    reduce_table(table, codec, false, [](const Key& k) { return static_cast<long>(k.back()); });
  }
};

struct MifHandler {
  DpContext& ctx;
  long clique_cap = 2;  // at most two forest vertices per cover clique
  long class_cap = -1;  // 2 * kappa_hat

  PartitionCodec codec_at(int t) const {
    PartitionCodec c;
    c.bag_size = static_cast<int>(ctx.bag(t).size());
    c.has_v0 = true;
    return c;
  }

  Table leaf(int) {
    Table t;
    t.emplace(Key{1}, Val{});  // v0 alone in block 0
    return t;
  }

  Table introduce(int t, const Table& child) {
    const NiceNode& nd = ctx.trad->nodes[t];
    const std::vector<int>& cb = ctx.child_bag(t);
    int pos = bag_position(nd.bag, nd.vertex);
    int v = nd.vertex;
    PartitionCodec codec = codec_at(t);
    PartitionCodec child_codec;
    child_codec.bag_size = static_cast<int>(cb.size());
    child_codec.has_v0 = true;

    Table out;
    for (const auto& [key, val] : child) {
      upsert(out, insert_at(key, pos, 0), val.value, val.wit, true);
      if (ctx.prune) {
        long in_clique = 1, in_class = 1;
        for (int i = 0; i < static_cast<int>(cb.size()); ++i) {
          if (!key[i]) continue;
          if (ctx.clique_of[cb[i]] == ctx.clique_of[v]) ++in_clique;
          if (ctx.part->class_of[cb[i]] == ctx.part->class_of[v]) ++in_class;
        }
        if (in_clique > clique_cap) continue;
        if (class_cap >= 0 && in_class > class_cap) continue;
      }
      SetPartition p = child_codec.extract(key);
      int rank = child_codec.rank_of(key, pos);
      SetPartition grown = insert_element(p, rank);
      Key k = insert_at(key, pos, 1);
      codec.write(k, grown);
      upsert(out, std::move(k), val.value, val.wit, true);
    }
    return out;
  }

  Table forget(int t, const Table& child) {
    const NiceNode& nd = ctx.trad->nodes[t];
    const std::vector<int>& cb = ctx.child_bag(t);
    int pos = bag_position(cb, nd.vertex);
    int v = nd.vertex;
    PartitionCodec child_codec;
    child_codec.bag_size = static_cast<int>(cb.size());
    child_codec.has_v0 = true;
    PartitionCodec codec = codec_at(t);
    std::vector<int> nbr;
    for (int i = 0; i < static_cast<int>(cb.size()); ++i)
      if (i != pos && ctx.g->adjacent(cb[i], v)) nbr.push_back(i);

    Table out;
    for (const auto& [key, val] : child) {
      if (key[pos] == 0) {
        upsert(out, erase_at(key, pos), val.value, val.wit, true);
        continue;
      }
      SetPartition p = child_codec.extract(key);
      int rank = child_codec.rank_of(key, pos);
      bool cyclic = false;
      for (int i : nbr) {
        if (!key[i]) continue;
        int other = child_codec.rank_of(key, i);
        if (p.labels[rank] == p.labels[other]) {
          cyclic = true;  // induced edge closes a cycle
          break;
        }
        p = glue(p, rank, other);
      }
      if (cyclic) continue;
      int v0_rank = static_cast<int>(p.size()) - 1;
      long value = val.value + 1;
      WitPtr wit = wit_push(val.wit, v);
      // Keep the tree of v0 or attach v's component to it via one v0-edge.
      if (p.labels[rank] != p.labels[v0_rank]) {
        SetPartition attached = glue(p, rank, v0_rank);
        SetPartition rest = *project(attached, rank, false);
        Key k = erase_at(key, pos);
        codec.write(k, rest);
        upsert(out, k, value, wit, true);
      }
      // Without the v0-edge: only valid when v leaves a populated block.
      int block_members = 0;
      for (unsigned e = 0; e < p.size(); ++e)
        if (p.labels[e] == p.labels[rank]) ++block_members;
      if (block_members > 1) {
        SetPartition rest = *project(p, rank, false);
        Key k = erase_at(key, pos);
        codec.write(k, rest);
        upsert(out, std::move(k), value, std::move(wit), true);
      }
    }
    return out;
  }

  Table join(int t, const Table& left, const Table& right) {
    PartitionCodec codec = codec_at(t);
    std::unordered_map<Key, std::vector<const std::pair<const Key, Val>*>, KeyHash> rows;
    for (const auto& entry : right) rows[codec.mask_of(entry.first)].push_back(&entry);
    Table out;
    for (const auto& [key, val] : left) {
      auto it = rows.find(codec.mask_of(key));
      if (it == rows.end()) continue;
      SetPartition p1 = codec.extract(key);
      for (const auto* rhs : it->second) {
        SetPartition p2 = codec.extract(rhs->first);
        SetPartition joined = fatgraph::join(p1, p2);
        // Union of two forests sharing the bag: acyclic iff the component
        // count matches the Euler bound.
        if (joined.block_count() != p1.block_count() + p2.block_count() - p1.size()) continue;
        Key k = key;
        codec.write(k, joined);
        upsert(out, std::move(k), val.value + rhs->second.value,
               wit_concat(val.wit, rhs->second.wit), true);
      }
    }
    return out;
  }

  void post(int t, Table& table) {
    PartitionCodec codec = codec_at(t);
    reduce_table(table, codec, true, [&codec](const Key& k) {
      return static_cast<long>(codec.extract(k).block_count());
    });
  }
};

// ---------------------------------------------------------------------------
// Decomposition prep and the public solve entry point
// ---------------------------------------------------------------------------

struct Prepared {
  KappaPartition part;
  TraditionalTreeDecomposition trad;
  Rational weighted_width;
  std::string method;
};

Prepared prepare(const IntersectionGraph& g, const SolveOptions& opts) {
  Prepared out;
  out.part = build_kappa_partition(g, opts.gamma);
  WeightedTreeDecomposition wtd;
  if (opts.use_separator_decomposition) {
    if (!opts.geometry)
      throw unsupported_error("separator decomposition needs the geometric instance");
    double exponent = 1.0 - 1.0 / static_cast<double>(opts.geometry->dimension);
    Rational base(opts.base_c * std::pow(static_cast<double>(g.n), exponent));
    wtd = decompose_by_separator(out.part.contracted,
                                 geometric_separator_callback(out.part, *opts.geometry, opts.sep),
                                 base);
    out.method = "separator";
  } else {
    wtd = decompose_by_blowup(out.part.contracted);
    out.method = "blowup";
  }
  out.weighted_width = wtd.weighted_width;
  out.trad = to_traditional(wtd, out.part);
  return out;
}

SolveResult finish_result(const ProblemInstance& inst, bool feasible, long optimum,
                          std::vector<int> witness, const Prepared& prep, DpContext& ctx,
                          std::chrono::steady_clock::time_point start) {
  SolveResult res;
  res.feasible = feasible;
  res.optimum = optimum;
  res.witness = std::move(witness);
  res.stats.weighted_width = prep.weighted_width.get_d();
  res.stats.kappa_hat = prep.part.kappa_hat;
  res.stats.delta_hat = prep.part.delta_hat;
  res.stats.prune_cap = ctx.prune ? ctx.class_cap : -1;
  res.stats.peak_states = ctx.peak_states;
  res.stats.method = prep.method;
  res.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (res.feasible && !verify_witness(inst, res.witness))
    throw std::logic_error("solver returned an invalid witness");
  if (res.feasible && static_cast<long>(res.witness.size()) != res.optimum)
    throw std::logic_error("witness size does not match the reported optimum");
  return res;
}

}  // namespace

SolveResult solve(const ProblemInstance& inst, const SolveOptions& opts) {
  inst.validate();
  auto start = std::chrono::steady_clock::now();
  const IntersectionGraph& g = inst.graph;

  if (g.n == 0) {
    SolveResult res;
    res.feasible = inst.problem != Problem::SteinerTree;
    return res;
  }

  // Complement problems reuse the primal solver.
  if (inst.problem == Problem::VertexCover) {
    ProblemInstance primal = inst;
    primal.problem = Problem::IndependentSet;
    SolveResult is = solve(primal, opts);
    SolveResult res = is;
    res.optimum = g.n - is.optimum;
    res.witness.clear();
    std::vector<char> in(g.n, 0);
    for (int v : is.witness) in[v] = 1;
    for (int v = 0; v < g.n; ++v)
      if (!in[v]) res.witness.push_back(v);
    if (!verify_witness(inst, res.witness))
      throw std::logic_error("solver returned an invalid witness");
    return res;
  }
  if (inst.problem == Problem::FeedbackVertexSet) {
    ProblemInstance primal = inst;
    primal.problem = Problem::MaxInducedForest;
    SolveResult mif = solve(primal, opts);
    SolveResult res = mif;
    res.optimum = g.n - mif.optimum;
    res.witness.clear();
    std::vector<char> in(g.n, 0);
    for (int v : mif.witness) in[v] = 1;
    for (int v = 0; v < g.n; ++v)
      if (!in[v]) res.witness.push_back(v);
    if (!verify_witness(inst, res.witness))
      throw std::logic_error("solver returned an invalid witness");
    return res;
  }

  Prepared prep = prepare(g, opts);
  DpContext ctx = make_context(prep.trad, g, prep.part);
  ctx.prune = !opts.disable_pruning;
  long kappa = prep.part.kappa_hat, delta = prep.part.delta_hat;

  switch (inst.problem) {
    case Problem::IndependentSet: {
      IsHandler h{ctx};
      Table root = run_dp(ctx, h);
      const Val& val = root.at(Key{});
      return finish_result(inst, true, val.value, wit_collect(val.wit), prep, ctx, start);
    }
    case Problem::DominatingSet: {
      ctx.class_cap = inst.r == 1 ? kappa * kappa * (delta + 1)
                                  : kappa * kappa * kappa * (delta + 1);
      DsHandler h{ctx, inst.r};
      Table root = run_dp(ctx, h);
      const Val& val = root.at(Key{});
      return finish_result(inst, true, val.value, wit_collect(val.wit), prep, ctx, start);
    }
    case Problem::SteinerTree: {
      ctx.class_cap = kappa * kappa * (delta + 1);
      SteinerHandler h{ctx, {}, false};
      h.is_terminal.assign(g.n, 0);
      for (int t : inst.terminals) h.is_terminal[t] = 1;
      Table root = run_dp(ctx, h);
      auto it = root.find(Key{1});
      if (it == root.end()) {
        SolveResult res;
        res.feasible = false;
        res.stats.method = prep.method;
        return res;
      }
      SolveResult res =
          finish_result(inst, true, it->second.value, wit_collect(it->second.wit), prep, ctx, start);
      if (inst.budget >= 0 && res.optimum > inst.budget) res.feasible = false;
      return res;
    }
    case Problem::ConnectedVertexCover: {
      if (g.edge_count() == 0)
        return finish_result(inst, true, 0, {}, prep, ctx, start);
      SteinerHandler h{ctx, {}, true};
      h.is_terminal.assign(g.n, 0);
      Table root = run_dp(ctx, h);
      auto it = root.find(Key{1});
      if (it == root.end()) {
        SolveResult res;
        res.feasible = false;
        res.stats.method = prep.method;
        return res;
      }
      return finish_result(inst, true, it->second.value, wit_collect(it->second.wit), prep, ctx,
                           start);
    }
    case Problem::MaxInducedForest: {
      MifHandler h{ctx};
      h.class_cap = 2 * kappa;
      Table root = run_dp(ctx, h);
      const Val& val = root.at(Key{1});
      return finish_result(inst, true, val.value, wit_collect(val.wit), prep, ctx, start);
    }
    default:
      throw std::logic_error("unhandled problem");
  }
}

namespace {

long brute_force_is_small(const IntersectionGraph& g, std::vector<int>* witness) {
  int n = g.n;
  std::vector<uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.adj[v]) adj[v] |= uint32_t{1} << w;
  long best = 0;
  uint32_t best_mask = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if ((mask >> v) & 1)
        if (adj[v] & mask) ok = false;
    if (!ok) continue;
    long size = __builtin_popcount(mask);
    if (size > best) {
      best = size;
      best_mask = mask;
    }
  }
  if (witness) {
    witness->clear();
    for (int v = 0; v < n; ++v)
      if ((best_mask >> v) & 1) witness->push_back(v);
  }
  return best;
}

// Independent sets of the separator: per clique, skip it or pick one member
// compatible with earlier picks.
void enumerate_separator_sets(const IntersectionGraph& g,
                              const std::vector<std::vector<int>>& cliques, size_t idx,
                              std::vector<int>& chosen,
                              const std::function<void(const std::vector<int>&)>& emit) {
  if (idx == cliques.size()) {
    emit(chosen);
    return;
  }
  enumerate_separator_sets(g, cliques, idx + 1, chosen, emit);
  for (int v : cliques[idx]) {
    bool ok = true;
    for (int u : chosen)
      if (g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(v);
    enumerate_separator_sets(g, cliques, idx + 1, chosen, emit);
    chosen.pop_back();
  }
}

long separator_recursion_is(const ObjectSet& objs, const SeparatorOptions& opts,
                            std::vector<int>* witness) {
  int n = objs.size();
  if (n == 0) {
    if (witness) witness->clear();
    return 0;
  }
  IntersectionGraph g = build_intersection_graph(objs);
  if (n <= 8) return brute_force_is_small(g, witness);

  if (!g.connected()) {
    long total = 0;
    std::vector<int> wit;
    for (const auto& comp : g.components()) {
      std::vector<int> sub_wit;
      total += separator_recursion_is(subset_objects(objs, comp), opts, &sub_wit);
      for (int local : sub_wit) wit.push_back(comp[local]);
    }
    if (witness) {
      std::sort(wit.begin(), wit.end());
      *witness = std::move(wit);
    }
    return total;
  }

  CliqueSeparator sep = build_separator(objs, opts);
  if (sep.cliques.empty()) {
    // Nothing on the boundary: the sides are already disconnected.
    long total = 0;
    std::vector<int> wit;
    for (const std::vector<int>* side : {&sep.side_a, &sep.side_b}) {
      if (side->empty()) continue;
      std::vector<int> sub_wit;
      total += separator_recursion_is(subset_objects(objs, *side), opts, &sub_wit);
      for (int local : sub_wit) wit.push_back((*side)[local]);
    }
    if (witness) {
      std::sort(wit.begin(), wit.end());
      *witness = std::move(wit);
    }
    return total;
  }

  std::vector<char> in_sep(n, 0);
  for (const auto& c : sep.cliques)
    for (int v : c) in_sep[v] = 1;

  long best = -1;
  std::vector<int> best_wit;
  std::vector<int> chosen;
  enumerate_separator_sets(g, sep.cliques, 0, chosen, [&](const std::vector<int>& picked) {
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
      if (in_sep[v]) removed[v] = 1;
    for (int v : picked) {
      for (int w : g.adj[v]) removed[w] = 1;
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!removed[v]) rest.push_back(v);

    long total = static_cast<long>(picked.size());
    std::vector<int> wit = picked;
    IntersectionGraph rg = g.induced(rest);
    for (const auto& comp_local : rg.components()) {
      std::vector<int> comp;
      for (int i : comp_local) comp.push_back(rest[i]);
      std::vector<int> sub_wit;
      total += separator_recursion_is(subset_objects(objs, comp), opts, &sub_wit);
      for (int local : sub_wit) wit.push_back(comp[local]);
    }
    if (total > best) {
      best = total;
      best_wit = std::move(wit);
    }
  });
  if (witness) {
    std::sort(best_wit.begin(), best_wit.end());
    *witness = std::move(best_wit);
  }
  return best;
}

}  // namespace

SolveResult solve_separator_recursion_is(const ObjectSet& objs, const SeparatorOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  SolveResult res;
  res.optimum = separator_recursion_is(objs, opts, &res.witness);
  res.stats.method = "separator-recursion";
  res.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ProblemInstance check;
  check.graph = build_intersection_graph(objs);
  check.problem = Problem::IndependentSet;
  if (!verify_witness(check, res.witness))
    throw std::logic_error("separator recursion returned an invalid witness");
  return res;
}

bool verify_witness(const ProblemInstance& inst, const std::vector<int>& witness) {
  const IntersectionGraph& g = inst.graph;
  std::vector<char> in(g.n, 0);
  for (int v : witness) {
    if (v < 0 || v >= g.n) return false;
    if (in[v]) return false;  // duplicates
    in[v] = 1;
  }
  auto induced_acyclic = [&](const std::vector<char>& sel) {
    std::vector<int> up(g.n);
    for (int v = 0; v < g.n; ++v) up[v] = v;
    std::function<int(int)> find = [&](int x) {
      while (up[x] != x) x = up[x] = up[up[x]];
      return x;
    };
    for (int v = 0; v < g.n; ++v) {
      if (!sel[v]) continue;
      for (int w : g.adj[v]) {
        if (w <= v || !sel[w]) continue;
        int a = find(v), b = find(w);
        if (a == b) return false;
        up[a] = b;
      }
    }
    return true;
  };
  auto induced_connected = [&](const std::vector<char>& sel) {
    int start = -1, count = 0;
    for (int v = 0; v < g.n; ++v)
      if (sel[v]) {
        if (start < 0) start = v;
        ++count;
      }
    if (count == 0) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int w : g.adj[v])
        if (sel[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return reached == count;
  };

  switch (inst.problem) {
    case Problem::IndependentSet:
      for (int v : witness)
        for (int w : g.adj[v])
          if (in[w]) return false;
      return true;
    case Problem::VertexCover:
      for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
          if (w > v && !in[v] && !in[w]) return false;
      return true;
    case Problem::DominatingSet: {
      if (witness.empty()) return g.n == 0;
      std::vector<int> dist(g.n, -1);
      std::vector<int> queue;
      for (int v : witness) {
        dist[v] = 0;
        queue.push_back(v);
      }
      for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (int w : g.adj[v])
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            queue.push_back(w);
          }
      }
      for (int v = 0; v < g.n; ++v)
        if (dist[v] < 0 || dist[v] > inst.r) return false;
      return true;
    }
    case Problem::SteinerTree:
      for (int t : inst.terminals)
        if (!in[t]) return false;
      return induced_connected(in);
    case Problem::MaxInducedForest:
      return induced_acyclic(in);
    case Problem::FeedbackVertexSet: {
      std::vector<char> rest(g.n, 0);
      for (int v = 0; v < g.n; ++v) rest[v] = !in[v];
      return induced_acyclic(rest);
    }
    case Problem::ConnectedVertexCover: {
      for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
          if (w > v && !in[v] && !in[w]) return false;
      return induced_connected(in);
    }
  }
  return false;
}

}  // namespace fatgraph
