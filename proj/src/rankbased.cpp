#include "fatgraph/rankbased.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fatgraph {

unsigned SetPartition::block_count() const {
  unsigned m = 0;
  for (uint8_t l : labels) m = std::max(m, static_cast<unsigned>(l) + 1);
  return labels.empty() ? 0 : m;
}

SetPartition SetPartition::bottom(unsigned u) {
  SetPartition p;
  for (unsigned i = 0; i < u; ++i) p.labels.push_back(static_cast<uint8_t>(i));
  return p;
}

SetPartition SetPartition::top(unsigned u) {
  SetPartition p;
  p.labels.assign(u, 0);
  return p;
}

SetPartition canonical_partition(const std::vector<int>& block_of) {
  SetPartition p;
  std::vector<int> remap(block_of.size(), -1);
  int next = 0;
  for (int b : block_of) {
    if (b < 0 || static_cast<size_t>(b) >= block_of.size())
      throw std::invalid_argument("block label out of range");
    if (remap[b] < 0) remap[b] = next++;
    p.labels.push_back(static_cast<uint8_t>(remap[b]));
  }
  return p;
}

namespace {

int find_root(std::vector<int>& up, int x) {
  while (up[x] != x) {
    up[x] = up[up[x]];
    x = up[x];
  }
  return x;
}

}  // namespace

SetPartition join(const SetPartition& p, const SetPartition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("join: universe mismatch");
  unsigned u = p.size();
  std::vector<int> up(u);
  std::iota(up.begin(), up.end(), 0);
  std::vector<int> first_p(u, -1), first_q(u, -1);
  for (unsigned i = 0; i < u; ++i) {
    if (first_p[p.labels[i]] < 0)
      first_p[p.labels[i]] = static_cast<int>(i);
    else
      up[find_root(up, i)] = find_root(up, first_p[p.labels[i]]);
    if (first_q[q.labels[i]] < 0)
      first_q[q.labels[i]] = static_cast<int>(i);
    else
      up[find_root(up, i)] = find_root(up, first_q[q.labels[i]]);
  }
  std::vector<int> block_of(u);
  for (unsigned i = 0; i < u; ++i) block_of[i] = find_root(up, static_cast<int>(i));
  return canonical_partition(block_of);
}

SetPartition insert_element(const SetPartition& p, unsigned pos) {
  if (pos > p.size()) throw std::invalid_argument("insert position out of range");
  std::vector<int> block_of;
  int fresh = static_cast<int>(p.size());
  for (unsigned i = 0; i < p.size() + 1; ++i) {
    if (i < pos)
      block_of.push_back(p.labels[i]);
    else if (i == pos)
      block_of.push_back(fresh);
    else
      block_of.push_back(p.labels[i - 1]);
  }
  return canonical_partition(block_of);
}

SetPartition glue(const SetPartition& p, unsigned a, unsigned b) {
  if (a >= p.size() || b >= p.size()) throw std::invalid_argument("glue element out of range");
  uint8_t la = p.labels[a], lb = p.labels[b];
  std::vector<int> block_of;
  for (uint8_t l : p.labels) block_of.push_back(l == lb ? la : l);
  return canonical_partition(block_of);
}

std::optional<SetPartition> project(const SetPartition& p, unsigned pos,
                                    bool require_connected) {
  if (pos >= p.size()) throw std::invalid_argument("project position out of range");
  bool singleton = true;
  for (unsigned i = 0; i < p.size(); ++i)
    if (i != pos && p.labels[i] == p.labels[pos]) {
      singleton = false;
      break;
    }
  if (require_connected && singleton && p.block_count() > 1) return std::nullopt;
  std::vector<int> block_of;
  for (unsigned i = 0; i < p.size(); ++i)
    if (i != pos) block_of.push_back(p.labels[i]);
  return canonical_partition(block_of);
}

void WeightedPartitionSet::insert_min(SetPartition p, long w) {
  for (auto& [q, wq] : entries)
    if (q == p) {
      wq = std::min(wq, w);
      return;
    }
  entries.emplace_back(std::move(p), w);
}

namespace {

// Row of the cut matrix: bit c set when the cut with element 0 on the left
// and mask c (over elements 1..u-1) on the right... concretely, column c
// stands for the subset S = {0} + {i : bit i-1 of c}, and the row has a 1
// exactly when S is a union of blocks of p.
std::vector<uint64_t> cut_row(const SetPartition& p, unsigned u) {
  unsigned blocks = p.block_count();
  std::vector<uint32_t> block_mask(blocks, 0);
  for (unsigned i = 0; i < u; ++i) block_mask[p.labels[i]] |= 1u << i;
  uint32_t base = block_mask[p.labels[0]];

  std::vector<uint32_t> others;
  for (unsigned b = 0; b < blocks; ++b)
    if (b != p.labels[0]) others.push_back(block_mask[b]);
  unsigned k = static_cast<unsigned>(others.size());
  if (k > 24) throw std::invalid_argument("partition too fine for dense reduce");

  size_t width = size_t{1} << (u - 1);
  std::vector<uint64_t> row((width + 63) / 64, 0);
  // Subset OR via the standard lowest-bit recurrence.
  std::vector<uint32_t> ors(size_t{1} << k);
  ors[0] = base;
  for (size_t sub = 1; sub < ors.size(); ++sub) {
    unsigned low = static_cast<unsigned>(__builtin_ctzll(sub));
    ors[sub] = ors[sub & (sub - 1)] | others[low];
  }
  for (uint32_t s : ors) {
    uint32_t col = s >> 1;
    row[col >> 6] |= uint64_t{1} << (col & 63);
  }
  return row;
}

int first_set_bit(const std::vector<uint64_t>& row) {
  for (size_t w = 0; w < row.size(); ++w)
    if (row[w]) return static_cast<int>(w * 64 + __builtin_ctzll(row[w]));
  return -1;
}

}  // namespace

std::vector<size_t> reduce_indices(const std::vector<std::pair<SetPartition, long>>& entries,
                                   unsigned u, bool maximize) {
  if (u == 0) throw std::invalid_argument("reduce over empty universe");
  if (u > 30) throw std::invalid_argument("universe larger than 30");

  std::vector<size_t> order(entries.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (entries[a].second != entries[b].second)
      return maximize ? entries[a].second > entries[b].second
                      : entries[a].second < entries[b].second;
    return entries[a].first < entries[b].first;
  });

  std::vector<std::vector<uint64_t>> basis;
  std::vector<int> pivots;
  std::vector<size_t> kept;
  size_t max_rank = u - 1 >= 20 ? SIZE_MAX : (size_t{1} << (u - 1));
  for (size_t idx : order) {
    if (kept.size() >= max_rank) break;
    std::vector<uint64_t> row = cut_row(entries[idx].first, u);
    for (size_t b = 0; b < basis.size(); ++b) {
      int piv = pivots[b];
      if (row[piv >> 6] & (uint64_t{1} << (piv & 63)))
        for (size_t w = 0; w < row.size(); ++w) row[w] ^= basis[b][w];
    }
    int piv = first_set_bit(row);
    if (piv < 0) continue;
    basis.push_back(std::move(row));
    pivots.push_back(piv);
    kept.push_back(idx);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

WeightedPartitionSet reduce(const WeightedPartitionSet& a, bool maximize) {
  std::vector<size_t> kept = reduce_indices(a.entries, a.universe_size(), maximize);
  WeightedPartitionSet out;
  out.universe = a.universe;
  for (size_t idx : kept) out.entries.push_back(a.entries[idx]);
  return out;
}

}  // namespace fatgraph
