#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "helpers.hpp"
#include "omni/cli.hpp"
#include "omni/instance_io.hpp"

using namespace omni;
using namespace omni::test;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("omni_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  [[nodiscard]] std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

std::string five_user_json() { return serialize_instance(five_user_instance()); }

}  // namespace

TEST_CASE("instance files round-trip through parse and serialize") {
  const Instance packets = parse_instance(five_user_json());
  CHECK(serialize_instance(packets) == five_user_json());
  CHECK(instance_ground(packets).size() == 5);

  const EntropyTable table = table_from_oracle(PacketOracle(two_user_instance({"a"}, {"a", "b"})));
  const std::string table_json = serialize_instance(table);
  const Instance reparsed = parse_instance(table_json);
  CHECK(serialize_instance(reparsed) == table_json);
  CHECK(make_oracle(reparsed)->entropy(sub({1, 2})) == rat(2));
}

TEST_CASE("instance parsing errors carry context") {
  CHECK_THROWS_WITH_AS(parse_instance("{\"type\":\"packets\"}"),
                       "instance: packets instance needs a \"users\" array", std::invalid_argument);
  CHECK_THROWS_AS(parse_instance("{\"type\":\"nope\"}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance("not json at all"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance("{\"type\":\"table\",\"n\":2,\"values\":[[\"0\",\"0\"]]}"),
                  std::invalid_argument);
  // a non-polymatroid table is refused unless validation is skipped
  const std::string bad =
      "{\"type\":\"table\",\"n\":2,\"values\":[[\"0\",\"0\"],[\"1\",\"1\"],[\"2\",\"1\"],[\"3\",\"3\"]]}";
  CHECK_THROWS_AS(parse_instance(bad), PolymatroidError);
  const Instance loose = parse_instance(bad, false);
  CHECK_FALSE(make_oracle(loose)->validated());
}

TEST_CASE("solve reports the optimum") {
  const TempFile file(five_user_json());

  const CliResult human = run_cli({"solve", file.str(), "--ordering", "4,3,2,5,1"});
  CHECK(human.code == cli::kOk);
  CHECK(human.out.find("r_aco: 11/2") != std::string::npos);
  CHECK(human.out.find("fundamental_partition: {{1,3,4},{2},{5}}") != std::string::npos);
  CHECK(human.out.find("rates: (0, 1/2, 2, 5/2, 1/2)") != std::string::npos);
  CHECK(human.out.find("alpha_trace: 19/4 11/2") != std::string::npos);
  CHECK(human.out.find("mmi: 5/2") != std::string::npos);

  const CliResult nco = run_cli({"solve", file.str(), "--ordering", "4,3,2,5,1", "--non-asymptotic"});
  CHECK(nco.code == cli::kOk);
  CHECK(nco.out.find("r_nco: 6") != std::string::npos);
  CHECK(nco.out.find("nco_rates: (0, 1, 2, 3, 0)") != std::string::npos);
  CHECK(nco.out.find("nco_partition: {{1,2,3,4,5}}") != std::string::npos);

  const CliResult weighted =
      run_cli({"solve", file.str(), "--weights", "4,1/2,1/2,3/10,33/10"});
  CHECK(weighted.code == cli::kOk);
  CHECK(weighted.out.find("r_aco: 11/2") != std::string::npos);
  CHECK(weighted.out.find("rates: (0, 1/2, 2, 5/2, 1/2)") != std::string::npos);
}

TEST_CASE("solve --json round-trips through validate") {
  const TempFile file(five_user_json());
  const CliResult solved = run_cli({"solve", file.str(), "--json", "--non-asymptotic"});
  REQUIRE(solved.code == cli::kOk);

  const auto root = nlohmann::json::parse(solved.out);
  CHECK(root["r_aco"] == "11/2");
  CHECK(root["oracle_validated"] == true);
  CHECK(root["non_asymptotic"]["r_nco"] == 6);

  std::string rates_csv;
  for (const auto& r : root["rates"]) {
    if (!rates_csv.empty()) rates_csv += ',';
    rates_csv += r.get<std::string>();
  }
  const CliResult validated = run_cli(
      {"validate", file.str(), "--rates", rates_csv, "--alpha", root["r_aco"].get<std::string>()});
  CHECK(validated.code == cli::kOk);
  CHECK(validated.out == "ok\n");

  std::string nco_csv;
  for (const auto& r : root["non_asymptotic"]["rates"]) {
    if (!nco_csv.empty()) nco_csv += ',';
    nco_csv += r.get<std::string>();
  }
  const CliResult nco_validated =
      run_cli({"validate", file.str(), "--rates", nco_csv, "--alpha", "6"});
  CHECK(nco_validated.code == cli::kOk);
}

TEST_CASE("validate flags infeasible vectors and bad sums") {
  const TempFile file(five_user_json());

  const CliResult bad = run_cli({"validate", file.str(), "--rates", "0,0,0,0,0", "--alpha", "0"});
  CHECK(bad.code == cli::kInfeasible);
  CHECK(bad.out.find("violation:") != std::string::npos);

  const CliResult short_sum =
      run_cli({"validate", file.str(), "--rates", "0,1/2,2,5/2,1/2", "--alpha", "6"});
  CHECK(short_sum.code == cli::kInfeasible);
  CHECK(short_sum.out.find("r(V) = 11/2 != 6") != std::string::npos);

  const CliResult wrong_len = run_cli({"validate", file.str(), "--rates", "1,2", "--alpha", "3"});
  CHECK(wrong_len.code == cli::kInputError);
}

TEST_CASE("malformed input exits with a diagnostic") {
  const TempFile file("{\"type\":\"packets\",");
  const CliResult r = run_cli({"solve", file.str()});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("error:") != std::string::npos);

  const CliResult missing = run_cli({"solve", "/nonexistent/path.json"});
  CHECK(missing.code == cli::kInputError);

  const CliResult conflict = run_cli({"solve", file.str(), "--ordering", "1,2", "--weights", "1,2"});
  CHECK(conflict.code == cli::kInputError);

  const CliResult nothing = run_cli({});
  CHECK(nothing.code == cli::kInputError);
}

TEST_CASE("gen is deterministic and hits the packet target") {
  const CliResult a = run_cli({"gen", "--users", "5", "--packets", "8", "--seed", "7"});
  const CliResult b = run_cli({"gen", "--users", "5", "--packets", "8", "--seed", "7"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);

  const auto oracle = make_oracle(parse_instance(a.out));
  CHECK(oracle->entropy(oracle->ground().full()) == rat(8));

  const CliResult other = run_cli({"gen", "--users", "5", "--packets", "8", "--seed", "8"});
  CHECK(other.out != a.out);

  // n=2, m=1: the lone packet lands with user 1, user 2, or both
  const CliResult tiny = run_cli({"gen", "--users", "2", "--packets", "1", "--seed", "3"});
  const auto tiny_oracle = make_oracle(parse_instance(tiny.out));
  CHECK(tiny_oracle->entropy(tiny_oracle->ground().full()) == rat(1));

  // -o writes the same bytes to a file
  const auto out_path = std::filesystem::temp_directory_path() / "omni_gen_out.json";
  const CliResult to_file =
      run_cli({"gen", "--users", "5", "--packets", "8", "--seed", "7", "-o", out_path.string()});
  CHECK(to_file.code == cli::kOk);
  std::ifstream in(out_path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str() == a.out);
  std::filesystem::remove(out_path);
}

TEST_CASE("bench emits rows, means and the size invariant") {
  const CliResult a = run_cli({"bench", "--n-min", "2", "--n-max", "4", "--packets", "6", "--reps",
                               "3", "--seed", "5"});
  REQUIRE(a.code == cli::kOk);
  const CliResult b = run_cli({"bench", "--n-min", "2", "--n-max", "4", "--packets", "6", "--reps",
                               "3", "--seed", "5"});
  CHECK(a.out == b.out);  // byte-for-byte reproducible

  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line ==
        "kind,n,repetition,seed,fused_summed_size,unfused_summed_size,"
        "fused_calls,unfused_calls,fused_evals,unfused_evals,r_aco");
  int rows = 0;
  int means = 0;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string kind, n, rep, seed, fused, unfused;
    std::getline(fields, kind, ',');
    std::getline(fields, n, ',');
    std::getline(fields, rep, ',');
    std::getline(fields, seed, ',');
    std::getline(fields, fused, ',');
    std::getline(fields, unfused, ',');
    if (kind == "row") {
      ++rows;
      CHECK(std::stoll(fused) <= std::stoll(unfused));
      if (n == "2") CHECK(fused == unfused);  // one one-element call per sweep
    } else {
      CHECK(kind == "mean");
      ++means;
    }
  }
  CHECK(rows == 9);
  CHECK(means == 3);
}

TEST_CASE("help text documents the CSV columns") {
  const CliResult help = run_cli({"bench", "--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("fused_summed_size") != std::string::npos);
}
