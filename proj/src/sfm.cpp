#include "omni/sfm.hpp"

#include <bit>

#include "omni/errors.hpp"
#include "omni/setfunc.hpp"

namespace omni {

SfmEngine::Result BruteForceSfmEngine::minimize(
    int free_count, const std::function<Rational(std::uint64_t)>& objective) const {
  if (free_count < 0 || free_count > kMaxFreeElements) {
    throw CapExceeded("sfm: " + std::to_string(free_count) + " free elements exceeds the enumeration cap of " +
                      std::to_string(kMaxFreeElements));
  }
  const std::uint64_t limit = std::uint64_t{1} << free_count;
  Rational best;
  std::uint64_t first_min = 0;
  std::uint64_t and_of_minimizers = 0;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const Rational v = objective(mask);
    if (mask == 0 || v < best) {
      best = v;
      first_min = mask;
      and_of_minimizers = mask;
    } else if (v == best) {
      and_of_minimizers &= mask;
    }
  }
  // A proper subset of the first (numerically smallest) minimizer would
  // have been enumerated earlier, so lattice closure of the minimizer
  // family is exactly the statement that these two masks coincide.
  if (and_of_minimizers != first_min) {
    throw InternalError("sfm: minimizer family is not closed under intersection");
  }
  return {best, first_min, limit};
}

const SfmEngine& default_sfm_engine() {
  static const BruteForceSfmEngine engine;
  return engine;
}

namespace {

void bump(SfmStats& stats, int ground_size, std::uint64_t evaluations) {
  stats.calls += 1;
  stats.summed_ground_size += static_cast<std::uint64_t>(ground_size);
  stats.evaluations += evaluations;
}

}  // namespace

FusedMinResult minimize_fused(const EntropyOracle& oracle, const Rational& alpha, const RateVector& rates,
                              const FusedGround& ground, SfmStats& stats, const SfmEngine& engine) {
  if (ground.forced.count() != 1) throw std::invalid_argument("minimize_fused: forced must be a singleton");
  Subset seen = ground.forced;
  for (Subset b : ground.blocks) {
    if (b.empty() || seen.intersects(b)) {
      throw std::invalid_argument("minimize_fused: blocks must be disjoint and avoid the forced element");
    }
    seen |= b;
  }

  const int k = static_cast<int>(ground.blocks.size());
  const auto objective = [&](std::uint64_t umask) {
    Subset x = ground.forced;
    for (std::uint64_t m = umask; m != 0; m &= m - 1) {
      x |= ground.blocks[static_cast<std::size_t>(std::countr_zero(m))];
    }
    return dual_value(oracle, alpha, x) - rates.subset_sum(x);
  };
  const SfmEngine::Result r = engine.minimize(k, objective);
  bump(stats, k, r.evaluations);

  FusedMinResult out;
  out.min = r.min;
  out.expanded = ground.forced;
  for (std::uint64_t m = r.minimal_minimizer; m != 0; m &= m - 1) {
    const Subset block = ground.blocks[static_cast<std::size_t>(std::countr_zero(m))];
    out.minimizer.push_back(block);
    out.expanded |= block;
  }
  return out;
}

UnfusedMinResult minimize_unfused(const EntropyOracle& oracle, const Rational& alpha, const RateVector& rates,
                                  Subset processed, int forced, SfmStats& stats, const SfmEngine& engine) {
  const Subset forced_set = oracle.ground().singleton(forced);
  if (processed.contains(forced)) {
    throw std::invalid_argument("minimize_unfused: forced element already processed");
  }
  const std::vector<int> members = processed.members();

  const int k = static_cast<int>(members.size());
  const auto objective = [&](std::uint64_t umask) {
    Subset x = forced_set;
    for (std::uint64_t m = umask; m != 0; m &= m - 1) {
      x = x.with(members[static_cast<std::size_t>(std::countr_zero(m))]);
    }
    return dual_value(oracle, alpha, x) - rates.subset_sum(x);
  };
  const SfmEngine::Result r = engine.minimize(k, objective);
  bump(stats, k, r.evaluations);

  Subset minimizer = forced_set;
  for (std::uint64_t m = r.minimal_minimizer; m != 0; m &= m - 1) {
    minimizer = minimizer.with(members[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  return {r.min, minimizer};
}

}  // namespace omni
