#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "liftkit/cli.hpp"
#include "liftkit/compare.hpp"
#include "liftkit/curve_io.hpp"
#include "liftkit/disagreement.hpp"
#include "liftkit/metrics.hpp"
#include "liftkit/scored_file.hpp"

using namespace liftkit;

namespace {

const std::string kTable = std::string(LIFTKIT_DATA_DIR) + "/table2.csv";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "liftkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

RankedTestSet table() { return rank_records(load_scored(ScoredFile{kTable})); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("liftkit_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("auc and lift on the fixture") {
  CHECK(run({"auc", "--input", kTable}).out == "0.93750\n");
  CHECK(run({"auc", "--input", kTable, "--method", "wilcoxon"}).out == "0.93750\n");
  CHECK(run({"auc", "--input", kTable, "--exact"}).out == "15/16\n");
  CHECK(run({"auc", "--input", kTable, "--precision", "3"}).out == "0.938\n");
  CHECK(run({"lift", "--input", kTable, "--n", "12"}).out == "1.66667\n");
  CHECK(run({"lift", "--input", kTable, "--fraction", "0.5"}).out == "1.66667\n");
  CHECK(run({"lift", "--input", kTable, "--n", "12", "--exact"}).out == "5/3\n");
  const auto j = nlohmann::json::parse(run({"auc", "--input", kTable, "--format", "json"}).out);
  CHECK(j["num"] == 15);
  CHECK(j["den"] == 16);
}

TEST_CASE("gains table") {
  const auto r = run({"gains", "--input", kTable, "--n", "12"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "n\tcum_gains\tn/N\tp_cum_gains\n12\t10.00000\t0.50000\t0.83333\n");
  const auto all = run({"gains", "--input", kTable});
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 25);
}

TEST_CASE("commands are thin shells over the library") {
  const auto ranked = table();
  auto lib = [](std::vector<CurveSeries> s, OutputFormat f) {
    std::ostringstream o;
    emit_curves(o, s, f);
    return o.str();
  };
  CHECK(run({"lift", "--input", kTable, "--format", "csv"}).out == lib({lift_series(ranked, XKind::count)}, OutputFormat::csv));
  CHECK(run({"roc", "--input", kTable, "--format", "json"}).out == lib({roc_points(ranked)}, OutputFormat::json));
  CHECK(run({"deciles", "--input", kTable, "--format", "csv"}).out == lib({decile_series(ranked)}, OutputFormat::csv));
  CHECK(run({"benefit", "--input", kTable, "--format", "csv", "--qtp", "10", "--qfp", "-1"}).out ==
        lib({benefit_series(ranked, {10.0, -1.0})}, OutputFormat::csv));
  CHECK(run({"gains", "--input", kTable, "--format", "csv"}).out ==
        lib({gains_series(ranked, XKind::count), gains_series(ranked, XKind::fraction)}, OutputFormat::csv));
  CHECK(run({"benefit", "--input", kTable, "--n", "8", "--qtp", "10", "--qfp", "-1"}).out == "69.00000\n");
  const auto deciles = run({"deciles", "--input", kTable});
  CHECK(deciles.out.find("1\t3\t2.00000\n") != std::string::npos);
  CHECK(deciles.out.find("10\t24\t1.00000\n") != std::string::npos);
}

TEST_CASE("perturb and compare") {
  const auto path = temp_path("perturbed.csv");
  const auto r = run({"perturb", "--input", kTable, "--preset", "higher-auc-lower-lift", "--out", path.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out == "auc_before\t0.93750\nauc_after\t0.95139\n");
  CHECK(run({"auc", "--input", path.string(), "--precision", "3"}).out == "0.951\n");
  const auto swapped = run({"perturb", "--input", kTable, "--swap", "6:8", "--swap", "12:16"});
  CHECK(swapped.out == slurp(path));

  const auto cmp = run({"compare", "--input", kTable, "--input", path.string(), "--n", "6", "--n", "14"});
  CHECK(cmp.code == kExitOk);
  CHECK(cmp.out.find("6\ttable2\t6.00000\t2.00000\tyes\n") != std::string::npos);
  CHECK(cmp.out.find("14\tliftkit_test_perturbed\t12.00000") != std::string::npos);
  CHECK(run({"compare", "--input", kTable, "--input", kTable, "--n", "3"}).out.find("tie") != std::string::npos);
  std::filesystem::remove(path);

  CHECK(run({"perturb", "--input", kTable, "--swap", "3:30"}).code == kExitValidation);
  CHECK(run({"perturb", "--input", kTable, "--swap", "x"}).code == kExitValidation);
}

TEST_CASE("disagree emits a certified counterexample") {
  const auto r = run({"disagree", "--metric-a", "auc", "--metric-b", "lift@6", "--n", "10", "--npos", "5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("status: found") != std::string::npos);
  CHECK(r.out.find("certified: yes") != std::string::npos);
  const auto j = nlohmann::json::parse(
      run({"disagree", "--metric-a", "auc", "--metric-b", "lift@6", "--n", "10", "--npos", "5", "--format", "json"}).out);
  CHECK(j["certified"] == true);
  const auto lib = find_disagreement(MetricSpec::parse("auc"), MetricSpec::parse("lift@6"), ArrangementSpace{10, 5});
  std::string first;
  for (int v : lib.report->first) first += static_cast<char>('0' + v);
  CHECK(j["first"] == first);

  const auto none = run({"disagree", "--metric-a", "auc", "--metric-b", "auc", "--n", "8", "--npos", "4"});
  CHECK(none.code == kExitOk);
  CHECK(none.out.find("status: none") != std::string::npos);

  const auto hood = run({"disagree", "--input", kTable, "--metric-a", "auc", "--metric-b", "lift@6"});
  CHECK(hood.code == kExitOk);
  CHECK(hood.out.find("certified: yes") != std::string::npos);

  const auto budget = run({"disagree", "--metric-a", "auc", "--metric-b", "auc", "--n", "16", "--npos", "8",
                           "--exhaustive-limit", "100", "--budget", "200"});
  CHECK(budget.code == kExitInfeasible);
  CHECK(budget.out.find("budget-exhausted") != std::string::npos);
}

TEST_CASE("resample from the command line") {
  std::vector<std::string> args{"resample", "--rates", "0.05,0.2", "--reps", "4", "--size", "400", "--seed", "9",
                                "--pool-pos", "2000", "--pool-neg", "8000", "--grid", "20", "--format", "csv"};
  const auto a = run(args);
  CHECK(a.code == kExitOk);
  args.push_back("--threads");
  args.push_back("3");
  CHECK(run(args).out == a.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 1 + 2 * 20);

  const auto text = run({"resample", "--rates", "0.05,0.2", "--reps", "4", "--size", "400", "--pool-pos", "2000",
                         "--pool-neg", "8000", "--grid", "20"});
  CHECK(text.out.find("regularity at n/N=1/20") != std::string::npos);

  const auto bad = run({"resample", "--rates", "0.9", "--reps", "2", "--size", "1000", "--pool-pos", "100",
                        "--pool-neg", "5000"});
  CHECK(bad.code == kExitInfeasible);
  CHECK(bad.err.find("0.9") != std::string::npos);
}

TEST_CASE("chart from the command line") {
  const auto r = run({"chart", "--input", kTable, "--kind", "gains-fraction", "--title", "Gains"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("<?xml", 0) == 0);
  CHECK(r.out.find("stroke-dasharray=\"6 4\"") != std::string::npos);
  CHECK(run({"chart", "--input", kTable, "--kind", "pie"}).code == kExitValidation);
}

TEST_CASE("output is byte-identical across invocations") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gains", "--input", kTable, "--format", "json"},
           {"chart", "--input", kTable, "--kind", "lift"},
           {"disagree", "--metric-a", "accuracy@5", "--metric-b", "lift@2", "--n", "10", "--npos", "5"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("exit codes and usage") {
  CHECK(run({}).code == kExitValidation);
  const auto unknown = run({"frobnicate"});
  CHECK(unknown.code == kExitValidation);
  CHECK_FALSE(unknown.err.empty());
  CHECK(run({"auc", "--input", kTable, "--bogus"}).code == kExitValidation);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"auc"}).code == kExitValidation);
  CHECK(run({"auc", "--input", "/nonexistent.csv"}).code == kExitValidation);
  CHECK(run({"lift", "--input", kTable, "--n", "0"}).code == kExitValidation);
  CHECK(run({"lift", "--input", kTable, "--fraction", "1.5"}).code == kExitValidation);
  CHECK(run({"auc", "--input", kTable, "--tie-policy", "random"}).code == kExitValidation);
  CHECK(run({"disagree", "--metric-a", "auc"}).code == kExitValidation);
}

TEST_CASE("tie policy flag reaches the ranking") {
  const auto path = temp_path("ties.csv");
  {
    std::ofstream f(path);
    f << "id,score,label\nb,0.5,0\na,0.5,1\nc,0.1,0\nd,0.9,1\n";
  }
  CHECK(run({"gains", "--input", path.string(), "--n", "2", "--tie-policy", "input"}).out.find("2\t1.00000") != std::string::npos);
  CHECK(run({"gains", "--input", path.string(), "--n", "2", "--tie-policy", "id"}).out.find("2\t2.00000") != std::string::npos);
  CHECK(run({"gains", "--input", path.string(), "--n", "2", "--tie-policy", "expected"}).out.find("2\t1.50000") != std::string::npos);
  std::filesystem::remove(path);
}
