#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fatgraph/rational.hpp"

namespace fatgraph {

// Partition of {0..u-1} in canonical restricted-growth form: labels[i] is the
// block of element i and block labels appear in first-occurrence order.
struct SetPartition {
  std::vector<uint8_t> labels;

  unsigned size() const { return static_cast<unsigned>(labels.size()); }
  unsigned block_count() const;
  bool is_top() const { return block_count() <= 1; }

  static SetPartition bottom(unsigned u);  // all singletons
  static SetPartition top(unsigned u);     // one block

  bool operator==(const SetPartition& o) const { return labels == o.labels; }
  bool operator<(const SetPartition& o) const { return labels < o.labels; }
};

// Canonicalize an arbitrary block labeling.
SetPartition canonical_partition(const std::vector<int>& block_of);

// Finest common coarsening. Throws on universe mismatch.
SetPartition join(const SetPartition& p, const SetPartition& q);

// Extend the universe by a new element inserted at position pos as a
// singleton block.
SetPartition insert_element(const SetPartition& p, unsigned pos);

// Merge the blocks containing elements a and b.
SetPartition glue(const SetPartition& p, unsigned a, unsigned b);

// Remove the element at position pos. With require_connected, removing an
// element that forms a singleton block while other blocks remain yields
// nullopt (that component can never reconnect).
std::optional<SetPartition> project(const SetPartition& p, unsigned pos,
                                    bool require_connected);

struct WeightedPartitionSet {
  std::vector<int> universe;  // element names, ordered
  std::vector<std::pair<SetPartition, long>> entries;

  unsigned universe_size() const { return static_cast<unsigned>(universe.size()); }
  // Insert keeping the minimum weight per partition.
  void insert_min(SetPartition p, long w);
};

// Representative subset: indices (into `entries`) of a row basis of the
// cut matrix over GF(2), with rows taken in weight order (ascending, or
// descending when maximize). For every completion q, the best entry whose
// join with q is the single-block partition is preserved. At most 2^(u-1)
// indices are returned.
std::vector<size_t> reduce_indices(const std::vector<std::pair<SetPartition, long>>& entries,
                                   unsigned u, bool maximize = false);

// reduce_indices applied to a WeightedPartitionSet. Throws on u == 0.
WeightedPartitionSet reduce(const WeightedPartitionSet& a, bool maximize = false);

}  // namespace fatgraph
