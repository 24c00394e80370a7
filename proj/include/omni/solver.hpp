#pragma once

#include <optional>
#include <vector>

#include "omni/oracle.hpp"
#include "omni/partition.hpp"
#include "omni/rates.hpp"
#include "omni/rational.hpp"
#include "omni/sfm.hpp"

namespace omni {

enum class SatCapVariant { fused, unfused };

/// One coordinate step of the saturation-capacity sweep, recorded so tests
/// and callers can replay the exact update sequence.
struct SatCapStep {
  int user;                  // coordinate that was raised
  Rational sat_cap;          // the increment
  Subset expanded_minimizer; // minimal minimizer as a user set, incl. user
  int sfm_ground_size;       // free elements of this step's minimization
  Partition partition_after;
  RateVector rates_after;
};

struct TruncationSolveResult {
  RateVector rates;
  Partition minimizer;  // finest minimizer of the partition problem at alpha
  SfmStats stats;
  RateVector initial_rates;        // after the first coordinate was pinned
  Partition initial_partition;     // the first user's singleton
  std::vector<SatCapStep> steps;   // one per remaining coordinate
};

/// Coordinate-wise saturation-capacity sweep for the partition-wise minimum
/// of the dual set function at estimate alpha. Starts every rate at
/// alpha - H(V), pins the first user of phi to its dual singleton value,
/// then raises each next user by the saturation capacity from the chosen
/// minimization variant and fuses the partition blocks touching the
/// minimizer. For alpha at or above the optimum the result is a base-
/// polyhedron vertex whose total is alpha; below it the total falls short
/// of alpha.
TruncationSolveResult coord_sat_cap(const EntropyOracle& oracle, const Rational& alpha,
                                    const LinearOrdering& phi,
                                    SatCapVariant variant = SatCapVariant::fused,
                                    const SfmEngine& engine = default_sfm_engine());

struct OmniscienceSolution {
  Rational min_sum_rate;             // minimum total rate, asymptotic model
  Partition fundamental;             // finest optimal partition
  RateVector rates;                  // optimal rate vector summing to min_sum_rate
  std::vector<Rational> alpha_trace; // estimate per iteration, nondecreasing
  Rational mmi;                      // H(V) - min_sum_rate
  SfmStats stats;
  bool oracle_validated = true;
};

/// Iteratively tightens the sum-rate estimate from below: start at the
/// singleton-partition value, solve the truncation at the current estimate,
/// and recompute the estimate from the returned finest minimizer until the
/// partition reproduces itself. Needs at most n iterations; exceeding that
/// is reported as an internal error.
OmniscienceSolution solve_min_sum_rate(const EntropyOracle& oracle, const LinearOrdering& phi,
                                       SatCapVariant variant = SatCapVariant::fused,
                                       const SfmEngine& engine = default_sfm_engine());

/// Identity-ordering convenience overload.
OmniscienceSolution solve_min_sum_rate(const EntropyOracle& oracle);

struct NonAsymptoticSolution {
  long long min_sum_rate;  // ceil of the asymptotic optimum
  RateVector rates;        // integral optimal rates summing to min_sum_rate
  Partition minimizer;
  OmniscienceSolution asymptotic;
  SfmStats stats;  // asymptotic solve plus the final integral sweep
};

/// Integral-rate solve: run solve_min_sum_rate, round the optimum up to the next integer,
/// and run one more fused sweep at that value. Requires an integer-valued
/// oracle; the returned rates are always integral.
NonAsymptoticSolution solve_non_asymptotic(const EntropyOracle& oracle, const LinearOrdering& phi,
                                           const SfmEngine& engine = default_sfm_engine());

/// Users sorted by ascending weight, ties by ascending index.
/// Weights must be nonnegative.
LinearOrdering ordering_for_weights(const std::vector<Rational>& weights);

enum class RateMode { asymptotic, non_asymptotic };

/// Optimal rate vector minimizing the weighted total over the optimal-rate
/// set of the chosen mode, obtained by solving with the weight-consistent
/// ordering.
RateVector min_weighted_sum_rate(const EntropyOracle& oracle, const std::vector<Rational>& weights,
                                 RateMode mode, const SfmEngine& engine = default_sfm_engine());

struct FeasibilityViolation {
  enum class Kind { constraint, sum } kind;
  Subset x;           // offending subset (the full set for Kind::sum)
  Rational required;  // conditional entropy bound, or the target total
  Rational actual;    // r(X)
  [[nodiscard]] std::string describe(const GroundSet& ground) const;
};

/// Checks r(X) >= H(X | V\X) for every proper nonempty X (in increasing
/// mask order) and r(V) == alpha; returns the first violation, if any.
std::optional<FeasibilityViolation> check_rate_feasibility(const EntropyOracle& oracle,
                                                           const RateVector& rates,
                                                           const Rational& alpha);

}  // namespace omni
