#pragma once

#include <vector>

#include "omni/errors.hpp"
#include "omni/oracle.hpp"
#include "omni/partition.hpp"
#include "omni/rational.hpp"

namespace omni {

/// Hard cap for the Bell-number partition enumerations below.
inline constexpr int kMaxBruteforceUsers = 10;

/// The dual set function at sum-rate estimate alpha:
///   0 for X = {},  alpha for X = V,  alpha - H(V) + H(X) otherwise.
Rational dual_value(const EntropyOracle& oracle, const Rational& alpha, Subset x);

/// Block sum of dual_value over a partition of the ground set.
Rational partition_value(const EntropyOracle& oracle, const Rational& alpha, const Partition& p);

/// sum_{X in P} (H(V) - H(X)) / (|P| - 1); requires |P| >= 2.
Rational alpha_of_partition(const EntropyOracle& oracle, const Partition& p);

struct DilworthResult {
  Rational value;
  Partition minimizer;  // the finest minimizer
};

/// Minimum of partition_value over every partition of V, by full
/// enumeration (n <= 10). The returned minimizer refines every other
/// minimizer; its guaranteed existence is asserted, not assumed.
DilworthResult dilworth_bruteforce(const EntropyOracle& oracle, const Rational& alpha);

struct MinSumRateResult {
  Rational value;        // minimum sum-rate over the asymptotic model
  Partition fundamental;  // the finest maximizer
};

/// Maximum of alpha_of_partition over partitions with at least two blocks,
/// by full enumeration (n <= 10), with the finest maximizer.
MinSumRateResult min_sum_rate_bruteforce(const EntropyOracle& oracle);

/// Visits every partition of {0..n-1} exactly once, in restricted-growth-
/// string order (so blocks arrive already canonical). n <= 10.
template <typename Visit>
void for_each_partition(int n, Visit&& visit) {
  if (n < 1 || n > kMaxBruteforceUsers) {
    throw CapExceeded("for_each_partition: need 1 <= n <= " + std::to_string(kMaxBruteforceUsers));
  }
  std::vector<int> assign(static_cast<std::size_t>(n), 0);  // assign[i] = block of element i
  std::vector<Subset> blocks;
  while (true) {
    int block_count = 0;
    for (int a : assign) block_count = std::max(block_count, a + 1);
    blocks.assign(static_cast<std::size_t>(block_count), Subset{});
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(assign[i])] |= Subset{}.with(i);
    visit(Partition::of(blocks));

    // advance the restricted growth string: assign[i] <= 1 + max(assign[0..i-1])
    int i = n - 1;
    for (; i > 0; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, assign[j]);
      if (assign[i] <= prefix_max) break;
    }
    if (i == 0) return;
    ++assign[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) assign[static_cast<std::size_t>(j)] = 0;
  }
}

}  // namespace omni
