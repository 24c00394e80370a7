#pragma once

#include <cstdint>

#include "omni/oracle.hpp"

namespace omni {

struct GenConfig {
  int users;
  int packets;
  std::uint64_t seed;
};

/// Random packet instance: each of the m packets goes to each user
/// independently with probability 1/2, redrawing any packet nobody
/// received, so H(V) = m exactly. Fully determined by the seed (a
/// mt19937_64 word per draw, low bits as the membership mask).
PacketInstance generate_instance(const GenConfig& cfg);

/// splitmix64 finalizer; used to derive per-row seeds in the benchmark.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace omni
