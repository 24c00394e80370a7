#include "omni/gen.hpp"

#include <random>
#include <stdexcept>

namespace omni {

PacketInstance generate_instance(const GenConfig& cfg) {
  if (cfg.users < 2 || cfg.users > 64) throw std::invalid_argument("generate_instance: need 2 <= users <= 64");
  if (cfg.packets < 1) throw std::invalid_argument("generate_instance: need at least one packet");

  std::mt19937_64 rng(cfg.seed);
  const std::uint64_t user_mask =
      cfg.users == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cfg.users) - 1;

  std::vector<std::vector<std::string>> holdings(static_cast<std::size_t>(cfg.users));
  for (int packet = 0; packet < cfg.packets; ++packet) {
    std::uint64_t held = 0;
    while (held == 0) held = rng() & user_mask;
    const std::string id = "p" + std::to_string(packet);
    for (int user = 0; user < cfg.users; ++user) {
      if ((held >> user) & 1u) holdings[static_cast<std::size_t>(user)].push_back(id);
    }
  }
  return {GroundSet(cfg.users), std::move(holdings)};
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace omni
