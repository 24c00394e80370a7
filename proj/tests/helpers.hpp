#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "omni/gen.hpp"
#include "omni/oracle.hpp"
#include "omni/partition.hpp"
#include "omni/rates.hpp"
#include "omni/rational.hpp"

namespace omni::test {

// The five-user packet instance used throughout: users 1..5 hold
//   1:{a,c,e,f} 2:{a,d,h} 3:{b,c,e,f,g,h} 4:{a,c,f,g,h} 5:{b,d,f}
// so H(V)=8, the asymptotic optimum is 11/2 with optimal partition
// {{1,3,4},{2},{5}}, and the integral optimum is 6.
inline PacketInstance five_user_instance() {
  return PacketInstance(GroundSet(5), {{"a", "c", "e", "f"},
                                       {"a", "d", "h"},
                                       {"b", "c", "e", "f", "g", "h"},
                                       {"a", "c", "f", "g", "h"},
                                       {"b", "d", "f"}});
}

inline PacketInstance two_user_instance(std::vector<std::string> first, std::vector<std::string> second) {
  return PacketInstance(GroundSet(2), {std::move(first), std::move(second)});
}

// 1-based notation mirroring the way instances are written down.
inline Subset sub(std::initializer_list<int> users) {
  Subset s;
  for (int u : users) s = s.with(u - 1);
  return s;
}

inline Partition part(std::initializer_list<std::initializer_list<int>> blocks) {
  std::vector<Subset> subsets;
  for (const auto& b : blocks) subsets.push_back(sub(b));
  return Partition::of(std::move(subsets));
}

inline LinearOrdering ord(std::initializer_list<int> users) {
  std::vector<int> order;
  for (int u : users) order.push_back(u - 1);
  return LinearOrdering::of(std::move(order));
}

inline Rational rat(long long num, long long den = 1) { return {num, den}; }

inline RateVector rates(std::initializer_list<Rational> values) {
  return RateVector(std::vector<Rational>(values));
}

// Deterministic instance stream for property-style tests.
inline PacketInstance random_instance(std::mt19937_64& rng, int n_min, int n_max, int m_min, int m_max) {
  const int n = n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - n_min + 1));
  const int m = m_min + static_cast<int>(rng() % static_cast<std::uint64_t>(m_max - m_min + 1));
  return generate_instance({n, m, rng()});
}

inline Partition random_partition(std::mt19937_64& rng, int n) {
  std::vector<Subset> blocks;
  for (int i = 0; i < n; ++i) {
    const auto pick = static_cast<std::size_t>(rng() % (blocks.size() + 1));
    if (pick == blocks.size()) {
      blocks.push_back(Subset{}.with(i));
    } else {
      blocks[pick] |= Subset{}.with(i);
    }
  }
  return Partition::of(std::move(blocks));
}

}  // namespace omni::test
