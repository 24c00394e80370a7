#include "omni/setfunc.hpp"

namespace omni {

Rational dual_value(const EntropyOracle& oracle, const Rational& alpha, Subset x) {
  if (x.empty()) return 0;
  if (x == oracle.ground().full()) return alpha;
  return alpha - oracle.entropy(oracle.ground().full()) + oracle.entropy(x);
}

Rational partition_value(const EntropyOracle& oracle, const Rational& alpha, const Partition& p) {
  if (!p.covers(oracle.ground())) {
    throw std::invalid_argument("partition_value: partition does not cover the ground set");
  }
  Rational sum;
  for (Subset block : p.blocks()) sum += dual_value(oracle, alpha, block);
  return sum;
}

Rational alpha_of_partition(const EntropyOracle& oracle, const Partition& p) {
  if (!p.covers(oracle.ground())) {
    throw std::invalid_argument("alpha_of_partition: partition does not cover the ground set");
  }
  if (p.size() < 2) throw InternalError("alpha_of_partition: needs at least two blocks");
  const Rational h_total = oracle.entropy(oracle.ground().full());
  Rational sum;
  for (Subset block : p.blocks()) sum += h_total - oracle.entropy(block);
  return sum / Rational(static_cast<long long>(p.size()) - 1);
}

namespace {

/// The unique element of candidates refining every other; errors loudly if
/// the tie set is not closed the way the lattice structure guarantees.
/// A finest element necessarily has the most blocks, so one linear verify
/// suffices even when the tie set is huge.
const Partition& finest_of(const std::vector<Partition>& candidates, const char* what) {
  const Partition* finest = &candidates.front();
  for (const Partition& p : candidates) {
    if (p.size() > finest->size()) finest = &p;
  }
  for (const Partition& q : candidates) {
    if (!refines(*finest, q)) {
      throw InternalError(std::string(what) + ": tied optima admit no finest element");
    }
  }
  return *finest;
}

void check_bruteforce_cap(const EntropyOracle& oracle, const char* what) {
  if (oracle.ground().size() > kMaxBruteforceUsers) {
    throw CapExceeded(std::string(what) + ": ground set too large (cap " +
                      std::to_string(kMaxBruteforceUsers) + ")");
  }
}

}  // namespace

DilworthResult dilworth_bruteforce(const EntropyOracle& oracle, const Rational& alpha) {
  check_bruteforce_cap(oracle, "dilworth_bruteforce");
  bool have = false;
  Rational best;
  std::vector<Partition> argmin;
  for_each_partition(oracle.ground().size(), [&](const Partition& p) {
    const Rational v = partition_value(oracle, alpha, p);
    if (!have || v < best) {
      have = true;
      best = v;
      argmin.assign(1, p);
    } else if (v == best) {
      argmin.push_back(p);
    }
  });
  return {best, finest_of(argmin, "dilworth_bruteforce")};
}

MinSumRateResult min_sum_rate_bruteforce(const EntropyOracle& oracle) {
  check_bruteforce_cap(oracle, "min_sum_rate_bruteforce");
  bool have = false;
  Rational best;
  std::vector<Partition> argmax;
  for_each_partition(oracle.ground().size(), [&](const Partition& p) {
    if (p.size() < 2) return;
    const Rational v = alpha_of_partition(oracle, p);
    if (!have || v > best) {
      have = true;
      best = v;
      argmax.assign(1, p);
    } else if (v == best) {
      argmax.push_back(p);
    }
  });
  return {best, finest_of(argmax, "min_sum_rate_bruteforce")};
}

}  // namespace omni
