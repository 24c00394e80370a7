#include "omni/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace omni {

std::string format_subset(Subset x) {
  std::string out = "{";
  bool first = true;
  for (int i : x.members()) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  out += '}';
  return out;
}

Partition Partition::of(std::vector<Subset> blocks) {
  if (blocks.empty()) throw std::invalid_argument("Partition: no blocks");
  Subset seen;
  for (Subset b : blocks) {
    if (b.empty()) throw std::invalid_argument("Partition: empty block");
    if (seen.intersects(b)) throw std::invalid_argument("Partition: overlapping blocks");
    seen |= b;
  }
  std::sort(blocks.begin(), blocks.end(),
            [](Subset a, Subset b) { return a.lowest() < b.lowest(); });
  Partition p;
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::singletons(const GroundSet& g) {
  std::vector<Subset> blocks;
  blocks.reserve(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) blocks.push_back(g.singleton(i));
  return of(std::move(blocks));
}

Partition Partition::whole(const GroundSet& g) { return of({g.full()}); }

Subset Partition::union_mask() const {
  Subset u;
  for (Subset b : blocks_) u |= b;
  return u;
}

bool refines(const Partition& p, const Partition& q) {
  if (p.union_mask() != q.union_mask()) {
    throw std::invalid_argument("refines: partitions cover different ground sets");
  }
  for (Subset pb : p.blocks()) {
    bool inside = false;
    for (Subset qb : q.blocks()) {
      if (pb.subset_of(qb)) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

Partition merge_blocks(const Partition& p, const std::vector<Subset>& to_merge) {
  if (to_merge.empty()) throw std::invalid_argument("merge_blocks: nothing to merge");
  for (Subset m : to_merge) {
    if (std::find(p.blocks().begin(), p.blocks().end(), m) == p.blocks().end()) {
      throw std::invalid_argument("merge_blocks: " + format_subset(m) + " is not a block");
    }
  }
  Subset merged;
  for (Subset m : to_merge) merged |= m;
  std::vector<Subset> next;
  next.reserve(p.size());
  for (Subset b : p.blocks()) {
    if (!b.subset_of(merged)) next.push_back(b);
  }
  next.push_back(merged);
  return Partition::of(std::move(next));
}

std::string format_partition(const Partition& p) {
  std::string out = "{";
  bool first = true;
  for (Subset b : p.blocks()) {
    if (!first) out += ',';
    out += format_subset(b);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace omni
