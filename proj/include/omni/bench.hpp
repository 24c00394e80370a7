#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "omni/rational.hpp"

namespace omni {

/// One benchmark measurement: the same random instance solved twice, with
/// the fused and the unfused saturation-capacity variant. The fused summed
/// ground size never exceeds the unfused one.
struct BenchRow {
  int n = 0;
  int repetition = 0;
  std::uint64_t seed = 0;
  std::uint64_t fused_summed_size = 0;
  std::uint64_t unfused_summed_size = 0;
  std::uint64_t fused_calls = 0;
  std::uint64_t unfused_calls = 0;
  std::uint64_t fused_evals = 0;
  std::uint64_t unfused_evals = 0;
  Rational r_aco;
};

/// Exact per-n means over the emitted rows.
struct BenchSummary {
  int n = 0;
  int rows = 0;
  Rational mean_fused_summed_size;
  Rational mean_unfused_summed_size;
  Rational mean_fused_calls;
  Rational mean_unfused_calls;
  Rational mean_fused_evals;
  Rational mean_unfused_evals;
  Rational mean_r_aco;
};

struct BenchConfig {
  int n_min = 5;
  int n_max = 12;
  int packets = 20;
  int reps = 20;
  std::uint64_t seed = 1;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchSummary> summaries;
  std::vector<std::string> warnings;  // skipped rows (enumeration cap)
};

/// Generates reps instances per ground-set size with per-row seeds derived
/// from the base seed, runs the estimate-tightening solve with both
/// variants on each, and collects the instrumentation. Rows are ordered by
/// (n, repetition); the whole report is a pure function of the config.
BenchReport run_bench(const BenchConfig& cfg);

/// Header row, then one "row" line per measurement and one "mean" line per
/// ground-set size; means are exact rationals.
void write_bench_csv(const BenchReport& report, std::ostream& out);

}  // namespace omni
