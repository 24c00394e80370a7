#include "omni/solver.hpp"

#include <algorithm>
#include <numeric>

#include "omni/errors.hpp"
#include "omni/setfunc.hpp"

namespace omni {

TruncationSolveResult coord_sat_cap(const EntropyOracle& oracle, const Rational& alpha,
                                    const LinearOrdering& phi, SatCapVariant variant,
                                    const SfmEngine& engine) {
  const GroundSet& ground = oracle.ground();
  const int n = ground.size();
  if (phi.size() != n) throw std::invalid_argument("coord_sat_cap: ordering length mismatch");

  const Rational floor = alpha - oracle.entropy(ground.full());
  RateVector rates(n);
  for (int i = 0; i < n; ++i) rates[i] = floor;

  const int first = phi.at(0);
  rates[first] = dual_value(oracle, alpha, ground.singleton(first));

  const Partition start = Partition::of({ground.singleton(first)});
  TruncationSolveResult result{rates, start, {}, rates, start, {}};
  result.steps.reserve(static_cast<std::size_t>(n) - 1);

  std::vector<Subset> blocks = {ground.singleton(first)};
  Subset processed = ground.singleton(first);

  for (int k = 1; k < n; ++k) {
    const int user = phi.at(k);
    Rational sat_cap;
    Subset expanded;
    int ground_size = 0;

    if (variant == SatCapVariant::fused) {
      const FusedMinResult r =
          minimize_fused(oracle, alpha, rates, {blocks, ground.singleton(user)}, result.stats, engine);
      sat_cap = r.min;
      expanded = r.expanded;
      ground_size = static_cast<int>(blocks.size());
    } else {
      const UnfusedMinResult r =
          minimize_unfused(oracle, alpha, rates, processed, user, result.stats, engine);
      sat_cap = r.min;
      expanded = r.minimizer;
      ground_size = processed.count();
    }

    rates[user] += sat_cap;

    // Fuse the new element with every block touching the minimizer.
    std::vector<Subset> to_merge = {ground.singleton(user)};
    for (Subset b : blocks) {
      if (b.intersects(expanded)) to_merge.push_back(b);
    }
    std::vector<Subset> with_user = blocks;
    with_user.push_back(ground.singleton(user));
    const Partition merged = merge_blocks(Partition::of(std::move(with_user)), to_merge);
    blocks = merged.blocks();
    processed = processed.with(user);

    result.steps.push_back({user, sat_cap, expanded, ground_size, merged, rates});
  }

  result.rates = rates;
  result.minimizer = Partition::of(blocks);
  return result;
}

OmniscienceSolution solve_min_sum_rate(const EntropyOracle& oracle, const LinearOrdering& phi,
                                       SatCapVariant variant, const SfmEngine& engine) {
  const GroundSet& ground = oracle.ground();
  OmniscienceSolution sol;
  sol.oracle_validated = oracle.validated();

  Partition p = Partition::singletons(ground);
  Rational alpha = alpha_of_partition(oracle, p);

  for (int iteration = 0; iteration < ground.size(); ++iteration) {
    TruncationSolveResult r = coord_sat_cap(oracle, alpha, phi, variant, engine);
    sol.alpha_trace.push_back(alpha);
    sol.stats += r.stats;
    if (r.minimizer == p) {
      sol.min_sum_rate = alpha;
      sol.fundamental = std::move(p);
      sol.rates = std::move(r.rates);
      sol.mmi = oracle.entropy(ground.full()) - alpha;
      return sol;
    }
    p = std::move(r.minimizer);
    if (p.size() < 2) {
      throw InternalError("solve_min_sum_rate: minimizer collapsed to the whole set below the optimum");
    }
    alpha = alpha_of_partition(oracle, p);
  }
  throw InternalError("solve_min_sum_rate: no fixpoint within the iteration cap");
}

OmniscienceSolution solve_min_sum_rate(const EntropyOracle& oracle) {
  return solve_min_sum_rate(oracle, LinearOrdering::identity(oracle.ground().size()));
}

NonAsymptoticSolution solve_non_asymptotic(const EntropyOracle& oracle, const LinearOrdering& phi,
                                           const SfmEngine& engine) {
  if (!oracle.integral()) {
    throw std::invalid_argument("solve_non_asymptotic: requires an integer-valued oracle");
  }
  OmniscienceSolution asym = solve_min_sum_rate(oracle, phi, SatCapVariant::fused, engine);
  const long long target = asym.min_sum_rate.ceil();
  TruncationSolveResult r = coord_sat_cap(oracle, Rational(target), phi, SatCapVariant::fused, engine);
  if (!r.rates.integral()) {
    throw InternalError("solve_non_asymptotic: sweep at an integral estimate returned fractional rates");
  }
  SfmStats total = asym.stats;
  total += r.stats;
  return {target, std::move(r.rates), std::move(r.minimizer), std::move(asym), total};
}

LinearOrdering ordering_for_weights(const std::vector<Rational>& weights) {
  for (const Rational& w : weights) {
    if (w.is_negative()) throw std::invalid_argument("ordering_for_weights: weights must be nonnegative");
  }
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto cmp = weights[static_cast<std::size_t>(a)] <=> weights[static_cast<std::size_t>(b)];
    return cmp != 0 ? cmp < 0 : a < b;
  });
  return LinearOrdering::of(std::move(order));
}

RateVector min_weighted_sum_rate(const EntropyOracle& oracle, const std::vector<Rational>& weights,
                                 RateMode mode, const SfmEngine& engine) {
  if (static_cast<int>(weights.size()) != oracle.ground().size()) {
    throw std::invalid_argument("min_weighted_sum_rate: weight length mismatch");
  }
  const LinearOrdering phi = ordering_for_weights(weights);
  if (mode == RateMode::asymptotic) {
    return solve_min_sum_rate(oracle, phi, SatCapVariant::fused, engine).rates;
  }
  return solve_non_asymptotic(oracle, phi, engine).rates;
}

std::string FeasibilityViolation::describe(const GroundSet& ground) const {
  if (kind == Kind::sum) {
    return "r(V) = " + actual.str() + " != " + required.str();
  }
  return "r(" + format_subset(x) + ") = " + actual.str() + " < H(" + format_subset(x) + "|" +
         format_subset(ground.complement(x)) + ") = " + required.str();
}

std::optional<FeasibilityViolation> check_rate_feasibility(const EntropyOracle& oracle,
                                                           const RateVector& rates,
                                                           const Rational& alpha) {
  const GroundSet& ground = oracle.ground();
  if (rates.size() != ground.size()) {
    throw std::invalid_argument("check_rate_feasibility: rate vector length mismatch");
  }
  if (ground.size() > 24) {
    throw CapExceeded("check_rate_feasibility: 2^n constraint scan capped at n = 24");
  }
  const std::uint64_t full = ground.full().mask();
  for (std::uint64_t m = 1; m < full; ++m) {
    const Subset x(m);
    const Rational required = oracle.conditional_entropy(x, ground.complement(x));
    const Rational actual = rates.subset_sum(x);
    if (actual < required) {
      return FeasibilityViolation{FeasibilityViolation::Kind::constraint, x, required, actual};
    }
  }
  const Rational total = rates.total();
  if (total != alpha) {
    return FeasibilityViolation{FeasibilityViolation::Kind::sum, ground.full(), alpha, total};
  }
  return std::nullopt;
}

}  // namespace omni
