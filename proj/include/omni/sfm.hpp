#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "omni/oracle.hpp"
#include "omni/partition.hpp"
#include "omni/rates.hpp"
#include "omni/rational.hpp"

namespace omni {

/// Instrumentation for one solve. "Ground size" counts the free elements of
/// each constrained minimization (the blocks of the fused problem, or the
/// already-processed users of the unfused one); evaluations counts objective
/// calls. All counters only grow during a solve.
struct SfmStats {
  std::uint64_t calls = 0;
  std::uint64_t summed_ground_size = 0;
  std::uint64_t evaluations = 0;

  SfmStats& operator+=(const SfmStats& o) {
    calls += o.calls;
    summed_ground_size += o.summed_ground_size;
    evaluations += o.evaluations;
    return *this;
  }
  friend bool operator==(const SfmStats&, const SfmStats&) = default;
};

/// Minimizes a submodular objective over the subsets of {0..free_count-1}
/// and reports the inclusion-minimal minimizer. Implementations may assume
/// the minimizer family is closed under intersection and union (true for
/// the objectives this library builds) and must fail loudly if the input
/// breaks that assumption. Kept behind an interface so a polynomial-time
/// method can replace the brute force without touching the solver.
class SfmEngine {
 public:
  struct Result {
    Rational min;
    std::uint64_t minimal_minimizer;  // bitmask over free elements
    std::uint64_t evaluations;
  };

  virtual ~SfmEngine() = default;
  virtual Result minimize(int free_count, const std::function<Rational(std::uint64_t)>& objective) const = 0;
  [[nodiscard]] virtual int capacity() const = 0;
};

/// Exhaustive enumeration in increasing mask order (deterministic
/// evaluation counts). The minimal minimizer falls out of one pass: the
/// numerically first minimizing mask must equal the AND of all minimizing
/// masks, and a mismatch is reported as an internal error because it would
/// disprove the lattice structure the caller relies on.
class BruteForceSfmEngine final : public SfmEngine {
 public:
  static constexpr int kMaxFreeElements = 20;

  Result minimize(int free_count, const std::function<Rational(std::uint64_t)>& objective) const override;
  [[nodiscard]] int capacity() const override { return kMaxFreeElements; }
};

const SfmEngine& default_sfm_engine();

/// Ground of the fused minimization: the blocks of the running partition
/// plus one forced singleton disjoint from all of them.
struct FusedGround {
  std::vector<Subset> blocks;
  Subset forced;
};

struct FusedMinResult {
  Rational min;
  std::vector<Subset> minimizer;  // minimal minimizer; excludes the forced element
  Subset expanded;                // forced | union(minimizer)
};

/// Minimizes dual_value(alpha, {forced} u U~) - r({forced} u U~) over block
/// subsets U of ground.blocks, where U~ is the union of the chosen blocks.
FusedMinResult minimize_fused(const EntropyOracle& oracle, const Rational& alpha, const RateVector& rates,
                              const FusedGround& ground, SfmStats& stats,
                              const SfmEngine& engine = default_sfm_engine());

struct UnfusedMinResult {
  Rational min;
  Subset minimizer;  // minimal minimizer; includes the forced element
};

/// Baseline without fusion: minimizes dual_value(alpha, X) - r(X) over all
/// X with forced in X, X \ {forced} inside processed.
UnfusedMinResult minimize_unfused(const EntropyOracle& oracle, const Rational& alpha, const RateVector& rates,
                                  Subset processed, int forced, SfmStats& stats,
                                  const SfmEngine& engine = default_sfm_engine());

}  // namespace omni
