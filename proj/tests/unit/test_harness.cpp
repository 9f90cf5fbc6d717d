#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <set>

#include "evo/core/errors.hpp"
#include "evo/harness/benchmark.hpp"
#include "evo/harness/config.hpp"
#include "evo/harness/presets.hpp"
#include "evo/harness/report.hpp"

using namespace evo;

namespace {

BenchmarkSpec quick_spec(AlgorithmId algo, ProblemId problem, std::size_t runs) {
  BenchmarkSpec spec = BenchmarkSpec::preset(algo, problem);
  spec.runs = runs;
  spec.base_seed = 7;
  return spec;
}

}  // namespace

TEST_CASE("parameter expressions") {
  const ParamVariables vars{{"dim", 3.0}, {"pop_size", 40.0}};
  CHECK(eval_param("10*dim", vars) == 30.0);
  CHECK(eval_param("19%") == doctest::Approx(0.19));
  CHECK(eval_param("1e-5") == 1e-5);
  CHECK(eval_param(" 2 * pop_size ", vars) == 80.0);
  CHECK_THROWS_AS(eval_param("abc"), ConfigInvalid);
  CHECK_THROWS_AS(eval_param("3*"), ConfigInvalid);
  CHECK_THROWS_AS(eval_param(""), ConfigInvalid);
}

TEST_CASE("config text round trip") {
  const std::string text =
      "# comment\n"
      "top=1\n"
      "[de.chebyshev]\n"
      "pop_size = 10*dim\n"
      "; another comment\n"
      "CR=0.5\n"
      "\n"
      "[problem.puc]\n"
      "radii=10\n";
  const ConfigFile file = parse_config(text);
  REQUIRE(file.section("") != nullptr);
  CHECK(file.section("")->get("top") == "1");
  REQUIRE(file.section("de.chebyshev") != nullptr);
  CHECK(file.section("de.chebyshev")->get("pop_size") == "10*dim");
  CHECK(file.section("missing") == nullptr);
  const ConfigFile again = parse_config(format_config(file));
  REQUIRE(again.sections.size() == file.sections.size());
  for (std::size_t i = 0; i < file.sections.size(); ++i) {
    CHECK(again.sections[i].first == file.sections[i].first);
    CHECK(again.sections[i].second == file.sections[i].second);
  }
  CHECK_THROWS_AS(parse_config("[broken\n"), ConfigInvalid);
  CHECK_THROWS_AS(parse_config("novalue\n"), ConfigInvalid);
}

TEST_CASE("assignments") {
  CHECK(parse_assignment("CR=0.3") == std::pair<std::string, std::string>{"CR", "0.3"});
  CHECK(parse_assignment("problem.dim=30").first == "problem.dim");
  CHECK_THROWS_AS(parse_assignment("CR"), ConfigInvalid);
  CHECK_THROWS_AS(parse_assignment("=3"), ConfigInvalid);
}

TEST_CASE("termination presets") {
  CHECK(termination_presets(ProblemId::chebyshev).threshold == 1e-5);
  CHECK(termination_presets(ProblemId::chebyshev).max_calls == 100000);
  CHECK(termination_presets(ProblemId::puc).threshold == 6e-5);
  CHECK(termination_presets(ProblemId::puc).max_calls == 400000);
  CHECK(termination_presets(ProblemId::type0).threshold == 1e-3);
  CHECK(termination_presets(ProblemId::type0).max_calls == 5000000);
  CHECK(termination_presets(ProblemId::beam).max_calls == 1000000);
  CHECK(parse_problem("PUC") == ProblemId::puc);
  CHECK_THROWS_AS(parse_problem("knapsack"), UnknownProblem);
}

TEST_CASE("every preset resolves and survives a text round trip") {
  const ConfigFile file = parse_config(format_config(preset_config()));
  for (AlgorithmId algo : kAllAlgorithms) {
    for (ProblemId problem : kAllProblems) {
      const ParamSet* p = file.section(algorithm_section(algo, problem));
      REQUIRE(p != nullptr);
      CHECK(*p == algorithm_preset(algo, problem));
      const std::size_t dim = ProblemSpec::preset(problem).dimension();
      CHECK_NOTHROW(build_algorithm_config(algo, *p, dim));
    }
  }
  for (ProblemId problem : kAllProblems) {
    const ParamSet* p = file.section(problem_section(problem));
    REQUIRE(p != nullptr);
    CHECK(*p == problem_preset(problem));
  }
  const ParamSet iasa_puc = algorithm_preset(AlgorithmId::iasa, ProblemId::puc);
  CHECK(iasa_puc.get("TminAtCallsRate") == "20%");
}

TEST_CASE("bad parameters are rejected") {
  ParamSet p = algorithm_preset(AlgorithmId::de, ProblemId::chebyshev);
  p.set("bogus", "1");
  CHECK_THROWS_AS(build_algorithm_config(AlgorithmId::de, p, 9), ConfigInvalid);
  ParamSet q = algorithm_preset(AlgorithmId::sade, ProblemId::chebyshev);
  q.set("CR", "fast");
  CHECK_THROWS_AS(build_algorithm_config(AlgorithmId::sade, q, 9), ConfigInvalid);
  BenchmarkSpec spec = quick_spec(AlgorithmId::de, ProblemId::chebyshev, 1);
  spec.algorithm_params.set("pop_size", "2");
  CHECK_THROWS_AS(run_benchmark(spec), ConfigInvalid);
}

TEST_CASE("run seeds are distinct and index bound") {
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < 10000; ++i) seen.insert(run_seed(7, i));
  CHECK(seen.size() == 10000);
  CHECK(run_seed(7, 3) == run_seed(7, 3));
  CHECK(run_seed(7, 3) != run_seed(8, 3));
}

TEST_CASE("a satisfiable target succeeds on the first call") {
  BenchmarkSpec spec = quick_spec(AlgorithmId::de, ProblemId::chebyshev, 1);
  spec.problem.params.set("threshold", "1e300");
  const BenchmarkReport r = run_benchmark(spec);
  CHECK(r.successes == 1);
  REQUIRE(r.avg_calls.has_value());
  CHECK(*r.avg_calls == 1.0);
  CHECK(r.records.at(0).reported_calls() == 1);
}

TEST_CASE("all failing runs give N/A") {
  BenchmarkSpec spec = quick_spec(AlgorithmId::sade, ProblemId::chebyshev, 3);
  spec.problem.params.set("max_calls", "50");
  const BenchmarkReport r = run_benchmark(spec);
  CHECK(r.successes == 0);
  CHECK_FALSE(r.avg_calls.has_value());
  CHECK(format_avg_calls(r) == "N/A");
  for (const auto& rec : r.records) CHECK(rec.calls_used == 50);
  const std::string csv = summary_csv({r});
  CHECK(csv.rfind("problem,algorithm,dim,runs,successes,avg_calls,base_seed\n", 0) == 0);
  CHECK(csv.find(",N/A,") != std::string::npos);
  CHECK(report_json({r}).find("\"avg_calls\": \"N/A\"") != std::string::npos);
}

TEST_CASE("aggregation matches a recount") {
  BenchmarkSpec spec = quick_spec(AlgorithmId::de, ProblemId::type0, 6);
  spec.problem.params.set("dim", "2");
  spec.problem.params.set("max_calls", "3000");
  const BenchmarkReport r = run_benchmark(spec);
  REQUIRE(r.records.size() == 6);
  std::size_t ok = 0;
  double sum = 0.0;
  for (const auto& rec : r.records) {
    if (!rec.success) continue;
    ++ok;
    sum += static_cast<double>(*rec.calls_at_success);
  }
  CHECK(r.successes == ok);
  if (ok > 0) {
    CHECK(*r.avg_calls == doctest::Approx(sum / static_cast<double>(ok)));
  } else {
    CHECK_FALSE(r.avg_calls.has_value());
  }
  BenchmarkReport copy = r;
  copy.successes = 999;
  copy.avg_calls.reset();
  aggregate(copy);
  CHECK(copy.successes == r.successes);
  CHECK(copy.avg_calls == r.avg_calls);
}

TEST_CASE("reports do not depend on worker count") {
  BenchmarkSpec spec = quick_spec(AlgorithmId::rasa, ProblemId::type0, 8);
  spec.problem.params.set("dim", "3");
  spec.problem.params.set("max_calls", "4000");
  const BenchmarkReport serial = run_benchmark(spec);
  const BenchmarkReport again = run_benchmark(spec);
  spec.workers = 3;
  const BenchmarkReport parallel = run_benchmark(spec);
  CHECK(summary_csv({serial}) == summary_csv({again}));
  CHECK(runs_csv(serial) == runs_csv(again));
  CHECK(report_json({serial}) == report_json({again}));
  CHECK(runs_csv(serial) == runs_csv(parallel));
  CHECK(report_json({serial}) == report_json({parallel}));
  // Each run gets its own type-0 instance.
  CHECK(serial.records[0].seed != serial.records[1].seed);
}

TEST_CASE("scaling study rows") {
  CHECK(scaling_study(AlgorithmId::de, {}, 3, 1).empty());
  ParamSet problem_overrides;
  problem_overrides.set("max_calls", "2000");
  const auto rows = scaling_study(AlgorithmId::de, {2, 3}, 2, 1, 1, {}, problem_overrides);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].dim == 2);
  CHECK(rows[1].dim == 3);
  CHECK(rows[1].report.dim == 3);
  const std::string plot = scaling_plot_data(rows);
  CHECK(plot.rfind("# dim avg_calls\n2 ", 0) == 0);
  CHECK(plot.find("\n3 ") != std::string::npos);
}

TEST_CASE("unwritable output raises an error") {
  CHECK_THROWS_AS(write_text_file("/proc/evo-no-such-dir/x.csv", "x"), Error);
  const auto tmp = std::filesystem::temp_directory_path() / "evo_harness_test" / "a" / "b.txt";
  std::filesystem::remove_all(tmp.parent_path().parent_path());
  CHECK_NOTHROW(write_text_file(tmp, "hello"));
  CHECK(std::filesystem::file_size(tmp) == 5);
  std::filesystem::remove_all(tmp.parent_path().parent_path());
}
