#pragma once

#include <string>
#include <vector>

#include "omni/ground.hpp"

namespace omni {

/// Pairwise disjoint nonempty blocks in canonical order (sorted by smallest
/// member), so equality is structural. A Partition need not cover a whole
/// ground set; covering is checked where it matters.
class Partition {
 public:
  Partition() = default;

  /// Canonicalizes and validates; throws std::invalid_argument on an empty
  /// block list, an empty block, or overlapping blocks.
  static Partition of(std::vector<Subset> blocks);

  static Partition singletons(const GroundSet& g);
  static Partition whole(const GroundSet& g);

  [[nodiscard]] const std::vector<Subset>& blocks() const { return blocks_; }
  [[nodiscard]] std::size_t size() const { return blocks_.size(); }
  [[nodiscard]] Subset union_mask() const;
  [[nodiscard]] bool covers(const GroundSet& g) const { return union_mask() == g.full(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Subset> blocks_;
};

/// True iff every block of p lies inside a block of q.
/// Throws std::invalid_argument when the two partitions cover different sets.
bool refines(const Partition& p, const Partition& q);

/// Replaces the given blocks of p by their union. Every element of to_merge
/// must be an exact block of p and the list must be nonempty.
Partition merge_blocks(const Partition& p, const std::vector<Subset>& to_merge);

/// "{{1,3,4},{2},{5}}" in canonical block order.
std::string format_partition(const Partition& p);

}  // namespace omni
