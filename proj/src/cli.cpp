#include "omni/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "omni/bench.hpp"
#include "omni/errors.hpp"
#include "omni/gen.hpp"
#include "omni/instance_io.hpp"
#include "omni/setfunc.hpp"
#include "omni/solver.hpp"

namespace omni::cli {

namespace {

using nlohmann::json;

std::vector<Rational> parse_rational_list(const std::string& csv, const char* what) {
  std::vector<Rational> out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": cannot parse '" + item + "' as a rational");
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

LinearOrdering parse_ordering(const std::string& csv, int n) {
  std::vector<int> order;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      order.push_back(std::stoi(item) - 1);  // users are 1-based on the command line
    } catch (const std::exception&) {
      throw std::invalid_argument("--ordering: cannot parse '" + item + "'");
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("--ordering: expected " + std::to_string(n) + " users");
  }
  return LinearOrdering::of(std::move(order));
}

json partition_json(const Partition& p) {
  json blocks = json::array();
  for (Subset b : p.blocks()) {
    json members = json::array();
    for (int i : b.members()) members.push_back(i + 1);
    blocks.push_back(std::move(members));
  }
  return blocks;
}

json rates_json(const RateVector& rv) {
  json out = json::array();
  for (int i = 0; i < rv.size(); ++i) out.push_back(rv[i].str());
  return out;
}

json stats_json(const SfmStats& s) {
  return json{{"calls", s.calls},
              {"summed_ground_size", s.summed_ground_size},
              {"evaluations", s.evaluations}};
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "' for writing");
  return file;
}

struct SolveOptions {
  std::string instance_path;
  std::string ordering;
  std::string weights;
  bool non_asymptotic = false;
  bool as_json = false;
  bool no_validate = false;
};

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  const Instance instance = load_instance(opt.instance_path, !opt.no_validate);
  const auto oracle = make_oracle(instance);
  const int n = oracle->ground().size();

  LinearOrdering phi = LinearOrdering::identity(n);
  if (!opt.ordering.empty()) phi = parse_ordering(opt.ordering, n);
  if (!opt.weights.empty()) {
    const auto weights = parse_rational_list(opt.weights, "--weights");
    if (static_cast<int>(weights.size()) != n) {
      throw std::invalid_argument("--weights: expected " + std::to_string(n) + " entries");
    }
    phi = ordering_for_weights(weights);
  }

  OmniscienceSolution sol;
  NonAsymptoticSolution nco{};
  const OmniscienceSolution* asym = nullptr;
  if (opt.non_asymptotic) {
    nco = solve_non_asymptotic(*oracle, phi);
    asym = &nco.asymptotic;
  } else {
    sol = solve_min_sum_rate(*oracle, phi);
    asym = &sol;
  }

  if (!asym->oracle_validated) {
    err << "warning: table was loaded without axiom checks; results assume it is a valid rank function\n";
  }

  if (opt.as_json) {
    json root{{"r_aco", asym->min_sum_rate.str()},
              {"fundamental_partition", partition_json(asym->fundamental)},
              {"rates", rates_json(asym->rates)},
              {"alpha_trace", json::array()},
              {"mmi", asym->mmi.str()},
              {"oracle_validated", asym->oracle_validated},
              {"stats", stats_json(asym->stats)}};
    for (const Rational& a : asym->alpha_trace) root["alpha_trace"].push_back(a.str());
    if (opt.non_asymptotic) {
      root["non_asymptotic"] = json{{"r_nco", nco.min_sum_rate},
                                    {"rates", rates_json(nco.rates)},
                                    {"partition", partition_json(nco.minimizer)},
                                    {"stats", stats_json(nco.stats)}};
    }
    out << root.dump(2) << "\n";
    return kOk;
  }

  out << "r_aco: " << asym->min_sum_rate.str() << "\n";
  out << "fundamental_partition: " << format_partition(asym->fundamental) << "\n";
  out << "rates: " << format_rates(asym->rates) << "\n";
  out << "alpha_trace:";
  for (const Rational& a : asym->alpha_trace) out << ' ' << a.str();
  out << "\n";
  out << "mmi: " << asym->mmi.str() << "\n";
  out << "sfm_stats: calls=" << asym->stats.calls
      << " summed_ground_size=" << asym->stats.summed_ground_size
      << " evaluations=" << asym->stats.evaluations << "\n";
  if (opt.non_asymptotic) {
    out << "r_nco: " << nco.min_sum_rate << "\n";
    out << "nco_rates: " << format_rates(nco.rates) << "\n";
    out << "nco_partition: " << format_partition(nco.minimizer) << "\n";
  }
  return kOk;
}

struct ValidateOptions {
  std::string instance_path;
  std::string rates;
  std::string alpha;
  bool no_validate = false;
};

int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& /*err*/) {
  const Instance instance = load_instance(opt.instance_path, !opt.no_validate);
  const auto oracle = make_oracle(instance);
  const auto rate_list = parse_rational_list(opt.rates, "--rates");
  if (static_cast<int>(rate_list.size()) != oracle->ground().size()) {
    throw std::invalid_argument("--rates: expected " + std::to_string(oracle->ground().size()) +
                                " entries");
  }
  const RateVector rates(rate_list);
  const Rational alpha = Rational::parse(opt.alpha);

  if (const auto violation = check_rate_feasibility(*oracle, rates, alpha)) {
    out << "violation: " << violation->describe(oracle->ground()) << "\n";
    return kInfeasible;
  }
  out << "ok\n";
  return kOk;
}

struct GenOptions {
  int users = 0;
  int packets = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& /*err*/) {
  const PacketInstance instance = generate_instance({opt.users, opt.packets, opt.seed});
  std::ofstream file;
  open_output(opt.output, file, out) << serialize_instance(instance);
  return kOk;
}

struct BenchOptions {
  BenchConfig cfg;
  std::string output;
};

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  const BenchReport report = run_bench(opt.cfg);
  for (const std::string& w : report.warnings) err << "warning: " << w << "\n";
  std::ofstream file;
  write_bench_csv(report, open_output(opt.output, file, out));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum sum-rate solver for communication for omniscience"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand(
      "solve", "Compute the minimum sum-rate, the fundamental partition and an optimal rate vector");
  solve->add_option("instance", solve_opt.instance_path, "Instance file (JSON)")->required();
  auto* ordering_opt = solve->add_option("--ordering", solve_opt.ordering,
                                         "Processing order as 1-based users, e.g. 4,3,2,5,1");
  solve->add_option("--weights", solve_opt.weights,
                    "Per-user weights p/q,...; solves with the weight-consistent ordering "
                    "(ascending weight, ties by user index)")
      ->excludes(ordering_opt);
  solve->add_flag("--non-asymptotic", solve_opt.non_asymptotic,
                  "Also compute the integral optimum (ceil of the asymptotic one)");
  solve->add_flag("--json", solve_opt.as_json, "Machine-readable output");
  solve->add_flag("--no-validate", solve_opt.no_validate, "Skip table axiom checks");

  ValidateOptions validate_opt;
  auto* validate = app.add_subcommand(
      "validate", "Check a rate vector against every omniscience constraint and the target sum");
  validate->add_option("instance", validate_opt.instance_path, "Instance file (JSON)")->required();
  validate->add_option("--rates", validate_opt.rates, "Rate vector p/q,...")->required();
  validate->add_option("--alpha", validate_opt.alpha, "Required total rate")->required();
  validate->add_flag("--no-validate", validate_opt.no_validate, "Skip table axiom checks");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Generate a random packet instance (H(V) = packets)");
  gen->add_option("--users", gen_opt.users, "Number of users (>= 2)")->required();
  gen->add_option("--packets", gen_opt.packets, "Number of packets (>= 1)")->required();
  gen->add_option("--seed", gen_opt.seed, "RNG seed; output is a pure function of it")->required();
  gen->add_option("-o,--output", gen_opt.output, "Write to a file instead of stdout");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand(
      "bench",
      "Compare fused vs unfused sweep cost on random instances. CSV columns: "
      "kind (row|mean), n, repetition, seed, fused_summed_size, unfused_summed_size, "
      "fused_calls, unfused_calls, fused_evals, unfused_evals, r_aco; one mean line per n "
      "with exact rational means.");
  bench->add_option("--n-min", bench_opt.cfg.n_min, "Smallest user count")->capture_default_str();
  bench->add_option("--n-max", bench_opt.cfg.n_max, "Largest user count")->capture_default_str();
  bench->add_option("--packets", bench_opt.cfg.packets, "Packets per instance")->capture_default_str();
  bench->add_option("--reps", bench_opt.cfg.reps, "Instances per user count")->capture_default_str();
  bench->add_option("--seed", bench_opt.cfg.seed, "Base seed; per-row seeds are derived from it")
      ->capture_default_str();
  bench->add_option("-o,--output", bench_opt.output, "Write the CSV to a file instead of stdout");

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("omni");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      std::ostringstream help;
      const int code = app.exit(e, help, help);
      out << help.str();
      return code;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_opt, out, err);
    if (validate->parsed()) return cmd_validate(validate_opt, out, err);
    if (gen->parsed()) return cmd_gen(gen_opt, out, err);
    if (bench->parsed()) return cmd_bench(bench_opt, out, err);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no subcommand\n";
  return kInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace omni::cli
