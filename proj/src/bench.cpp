#include "omni/bench.hpp"

#include "omni/errors.hpp"
#include "omni/gen.hpp"
#include "omni/solver.hpp"

namespace omni {

namespace {

std::uint64_t row_seed(const BenchConfig& cfg, int n, int rep) {
  return mix_seed(mix_seed(cfg.seed + static_cast<std::uint64_t>(n)) + static_cast<std::uint64_t>(rep));
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
  if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) throw std::invalid_argument("bench: bad n range");
  if (cfg.packets < 1 || cfg.reps < 1) throw std::invalid_argument("bench: need packets >= 1, reps >= 1");

  BenchReport report;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    BenchSummary summary;
    summary.n = n;
    for (int rep = 0; rep < cfg.reps; ++rep) {
      const std::uint64_t seed = row_seed(cfg, n, rep);
      const PacketOracle oracle(generate_instance({n, cfg.packets, seed}));
      const LinearOrdering phi = LinearOrdering::identity(n);

      OmniscienceSolution fused;
      OmniscienceSolution unfused;
      try {
        fused = solve_min_sum_rate(oracle, phi, SatCapVariant::fused);
        unfused = solve_min_sum_rate(oracle, phi, SatCapVariant::unfused);
      } catch (const CapExceeded& e) {
        report.warnings.push_back("skipped n=" + std::to_string(n) + " rep=" + std::to_string(rep) +
                                  ": " + e.what());
        continue;
      }
      if (fused.min_sum_rate != unfused.min_sum_rate || fused.rates != unfused.rates ||
          fused.fundamental != unfused.fundamental) {
        throw InternalError("bench: fused and unfused solves disagree");
      }
      if (fused.stats.summed_ground_size > unfused.stats.summed_ground_size) {
        throw InternalError("bench: fused summed ground size exceeds unfused");
      }

      BenchRow row;
      row.n = n;
      row.repetition = rep;
      row.seed = seed;
      row.fused_summed_size = fused.stats.summed_ground_size;
      row.unfused_summed_size = unfused.stats.summed_ground_size;
      row.fused_calls = fused.stats.calls;
      row.unfused_calls = unfused.stats.calls;
      row.fused_evals = fused.stats.evaluations;
      row.unfused_evals = unfused.stats.evaluations;
      row.r_aco = fused.min_sum_rate;
      report.rows.push_back(row);

      summary.rows += 1;
      summary.mean_fused_summed_size += Rational(static_cast<long long>(row.fused_summed_size));
      summary.mean_unfused_summed_size += Rational(static_cast<long long>(row.unfused_summed_size));
      summary.mean_fused_calls += Rational(static_cast<long long>(row.fused_calls));
      summary.mean_unfused_calls += Rational(static_cast<long long>(row.unfused_calls));
      summary.mean_fused_evals += Rational(static_cast<long long>(row.fused_evals));
      summary.mean_unfused_evals += Rational(static_cast<long long>(row.unfused_evals));
      summary.mean_r_aco += row.r_aco;
    }
    if (summary.rows > 0) {
      const Rational count(summary.rows);
      summary.mean_fused_summed_size /= count;
      summary.mean_unfused_summed_size /= count;
      summary.mean_fused_calls /= count;
      summary.mean_unfused_calls /= count;
      summary.mean_fused_evals /= count;
      summary.mean_unfused_evals /= count;
      summary.mean_r_aco /= count;
      report.summaries.push_back(summary);
    }
  }
  return report;
}

void write_bench_csv(const BenchReport& report, std::ostream& out) {
  out << "kind,n,repetition,seed,fused_summed_size,unfused_summed_size,"
         "fused_calls,unfused_calls,fused_evals,unfused_evals,r_aco\n";
  for (const BenchRow& r : report.rows) {
    out << "row," << r.n << ',' << r.repetition << ',' << r.seed << ',' << r.fused_summed_size << ','
        << r.unfused_summed_size << ',' << r.fused_calls << ',' << r.unfused_calls << ','
        << r.fused_evals << ',' << r.unfused_evals << ',' << r.r_aco.str() << '\n';
  }
  for (const BenchSummary& s : report.summaries) {
    out << "mean," << s.n << ",,," << s.mean_fused_summed_size.str() << ','
        << s.mean_unfused_summed_size.str() << ',' << s.mean_fused_calls.str() << ','
        << s.mean_unfused_calls.str() << ',' << s.mean_fused_evals.str() << ','
        << s.mean_unfused_evals.str() << ',' << s.mean_r_aco.str() << '\n';
  }
}

}  // namespace omni
