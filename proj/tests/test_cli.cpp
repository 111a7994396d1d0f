#include "commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace apsum;
using namespace apsum::cli;

namespace fs = std::filesystem;

namespace {

const fs::path kGolden = APSUM_GOLDEN_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "apsum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("apsum_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

IntegerSet interval(std::int64_t n) {
  std::vector<std::int64_t> v;
  for (std::int64_t x = 1; x <= n; ++x) v.push_back(x);
  return IntegerSet(v);
}

}  // namespace

TEST(CliGen, GoldenOutputs) {
  const auto interval_out = invoke({"gen", "--kind", "interval", "--n", "5"});
  EXPECT_EQ(interval_out.code, kExitWitness);
  EXPECT_EQ(interval_out.out, slurp(kGolden / "gen_interval_5.txt"));

  const auto ternary = invoke({"gen", "--kind", "ternary-apfree", "--n", "13"});
  EXPECT_EQ(ternary.out, slurp(kGolden / "gen_ternary_13.txt"));
  EXPECT_EQ(std::count(ternary.out.begin(), ternary.out.end(), '\n'), 7);

  const auto inline_spec = invoke({"gen", "--spec", R"({"kind":"ternary_apfree","N":13})"});
  EXPECT_EQ(inline_spec.out, ternary.out);
}

TEST(CliGen, RandomIsReproducible) {
  const auto a = invoke({"gen", "--kind", "random", "--n", "100", "--density", "1/2", "--seed", "7"});
  const auto b = invoke({"gen", "--kind", "random", "--n", "100", "--density", "1/2", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, invoke({"gen", "--kind", "random", "--n", "100", "--density", "1/2", "--seed", "8"}).out);
}

TEST(CliGen, Errors) {
  EXPECT_EQ(invoke({"gen", "--kind", "random", "--n", "10", "--density", "0.5"}).code, kExitError);
  EXPECT_EQ(invoke({"gen", "--kind", "nope", "--n", "10"}).code, kExitError);
  EXPECT_EQ(invoke({"gen", "--kind", "explicit", "--n", "3", "--values", "1,4"}).code, kExitError);
  EXPECT_EQ(invoke({}).code, kExitError);
}

TEST(CliPipeline, IntervalGoldenJson) {
  const auto r = invoke({"pipeline", "--a", (kGolden / "interval_5.txt").string(), "--b",
                      (kGolden / "interval_5.txt").string(), "--n", "5", "--k", "3"});
  EXPECT_EQ(r.code, kExitWitness);
  EXPECT_EQ(r.out, slurp(kGolden / "pipeline_interval_5.json"));
}

TEST(CliPipeline, ExitCodes) {
  TempDir dir;
  write(dir / "one.txt", "1\n");
  EXPECT_EQ(invoke({"pipeline", "--a", (dir / "one.txt").string(), "--b", (dir / "one.txt").string(), "--n", "1"}).code,
            kExitNoneFound);
  EXPECT_EQ(invoke({"pipeline", "--a", (dir / "one.txt").string(), "--b", (dir / "one.txt").string(), "--n", "1",
                 "--search-max-m", "3"})
                .code,
            kExitSearchInfeasible);
  write(dir / "big.txt", "1\n9\n");
  const auto out_of_range =
      invoke({"pipeline", "--a", (dir / "big.txt").string(), "--b", (dir / "one.txt").string(), "--n", "5"});
  EXPECT_EQ(out_of_range.code, kExitError);
  EXPECT_NE(out_of_range.err.find("outside"), std::string::npos);
  EXPECT_EQ(invoke({"pipeline", "--a", (dir / "one.txt").string(), "--b", (dir / "one.txt").string(), "--n", "1", "--k",
                 "2"})
                .code,
            kExitError);
  EXPECT_EQ(invoke({"pipeline", "--a", (dir / "missing.txt").string(), "--b", (dir / "one.txt").string(), "--n", "1"}).code,
            kExitError);
  EXPECT_EQ(invoke({"pipeline", "--a", (kGolden / "interval_5.txt").string(), "--b",
                 (kGolden / "interval_5.txt").string(), "--n", "5", "--budget-ops", "100"})
                .code,
            kExitError);
}

TEST(CliPipeline, TernaryReportsWhatSearchFinds) {
  const auto r = invoke({"pipeline", "--a", (kGolden / "gen_ternary_13.txt").string(), "--b",
                      (kGolden / "gen_ternary_13.txt").string(), "--n", "13", "--k", "3"});
  ASSERT_EQ(r.code, kExitWitness);
  const auto j = nlohmann::json::parse(r.out);
  // Frozen from an independent exhaustive computation: C has six elements,
  // S = 1346 > 6^4, so C + C is certified even though |C|^2 <= 53.
  EXPECT_EQ(j["report"]["S_exact"], "1346");
  EXPECT_EQ(j["report"]["sufficient_condition"], false);
  EXPECT_EQ(j["report"]["verdict"], "certified");
  const auto w = witness_from_json(j["witness_int"]);
  const auto a = IntegerSet{1, 3, 4, 9, 10, 12, 13};
  EXPECT_TRUE(witnesses(w, integer_sumset(a, a)));
}

TEST(CliPipeline, CsvFormat) {
  const auto r = invoke({"pipeline", "--a", (kGolden / "interval_5.txt").string(), "--b",
                      (kGolden / "interval_5.txt").string(), "--n", "5", "--format", "csv"});
  EXPECT_EQ(r.out, std::string(kSweepCsvHeader) + "\n5,3,0,5,5,5,5,1221,625,true,certified,true,6,1,0\n");
}

TEST(RunPipeline, SingletonSumsetHasNoProgression) {
  const auto o = run_pipeline(IntegerSet{1}, IntegerSet{1}, 1, 3);
  EXPECT_EQ(o.report.verdict, Verdict::inconclusive);
  EXPECT_EQ(o.scope, SearchScope::sumset_ab);
  EXPECT_FALSE(o.witness_int);
  EXPECT_EQ(o.exit_code, kExitNoneFound);
}

TEST(RunPipeline, IntervalChainValidates) {
  for (std::uint64_t n : {5, 12, 20}) {
    const auto a = interval(static_cast<std::int64_t>(n));
    const auto o = run_pipeline(a, a, n, 3);
    ASSERT_EQ(o.report.verdict, Verdict::certified);
    ASSERT_TRUE(o.witness_ab && o.witness_int);
    EXPECT_TRUE(witnesses(*o.witness_ab, sumset(o.trace.a, o.trace.b)));
    EXPECT_TRUE(witnesses(*o.witness_int, integer_sumset(a, a)));
  }
}

TEST(CliCertify, HeaderAndExitCodes) {
  TempDir dir;
  write(dir / "full.txt", "# modulus 5\n0\n1\n2\n3\n4\n");
  const auto r = invoke({"certify", "--c", (dir / "full.txt").string(), "--k", "3"});
  EXPECT_EQ(r.code, kExitWitness);
  EXPECT_EQ(nlohmann::json::parse(r.out)["S_exact"], "3125");
  write(dir / "zero.txt", "0\n");
  EXPECT_EQ(invoke({"certify", "--c", (dir / "zero.txt").string(), "--n", "1"}).code, kExitNoneFound);
  write(dir / "asym.txt", "# modulus 5\n1\n");
  EXPECT_EQ(invoke({"certify", "--c", (dir / "asym.txt").string()}).code, kExitError);
}

TEST(CliSearch, ModularAndInteger) {
  TempDir dir;
  write(dir / "m.txt", "# modulus 7\n1\n2\n3\n");
  const auto r = invoke({"search", "--set", (dir / "m.txt").string()});
  EXPECT_EQ(r.code, kExitWitness);
  EXPECT_EQ(r.out, "{\"diff\":1,\"first\":1,\"length\":3,\"modulus\":7,\"ring\":\"mod\"}\n");
  write(dir / "i.txt", "1\n2\n4\n8\n");
  EXPECT_EQ(invoke({"search", "--set", (dir / "i.txt").string()}).code, kExitNoneFound);
}

TEST(CliSweep, GoldenCsv) {
  const auto r = invoke({"sweep", "--ns", "25", "--ks", "3", "--densities", "1", "--trials", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(kGolden / "sweep_n25.csv"));
  const auto from_config = invoke({"sweep", "--config", (kGolden / "sweep_n25_config.json").string()});
  EXPECT_EQ(from_config.out, r.out);
  EXPECT_EQ(invoke({"sweep"}).out, slurp(kGolden / "sweep_empty.csv"));
}

TEST(CliSweep, JobsDoNotChangeOutput) {
  const std::vector<std::string> base{"sweep", "--ns", "10,20", "--ks", "3,4", "--densities", "1/2,3/4",
                                      "--trials", "3", "--seed", "42"};
  auto serial = base;
  serial.insert(serial.end(), {"--jobs", "1"});
  auto parallel = base;
  parallel.insert(parallel.end(), {"--jobs", "4"});
  const auto a = invoke(serial);
  const auto b = invoke(parallel);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 1 + 2 * 2 * 2 * 3);
}

TEST(CliSweep, RowsRespectInvariants) {
  SweepConfig config;
  config.ns = {8, 15, 30};
  config.ks = {3, 4};
  config.densities = {Density{1, 3}, Density{2, 3}};
  config.trials = 4;
  config.seed = 5;
  for (const auto& row : run_sweep(config)) {
    if (row.verdict == Verdict::certified) {
      EXPECT_TRUE(row.ap_found);
    }
    if (row.ap_found) {
      EXPECT_TRUE(row.witness_first && row.witness_diff);
      EXPECT_NE(*row.witness_diff, 0);
    }
  }
}

TEST(CliSweep, BudgetRejectedUpFront) {
  const auto r = invoke({"sweep", "--ns", "10,1000", "--budget-ops", "100000"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliSweep, JsonKeepsLargeNumbersAsStrings) {
  const auto r = invoke({"sweep", "--ns", "25", "--densities", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1U);
  EXPECT_TRUE(j[0]["seed"].is_string());
  EXPECT_TRUE(j[0]["S_exact"].is_string());
  EXPECT_EQ(j[0]["S_exact"], "3746105");
}
