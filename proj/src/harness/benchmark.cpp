#include "evo/harness/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <thread>

#include "evo/core/errors.hpp"
#include "evo/core/rng.hpp"

namespace evo {

BenchmarkSpec BenchmarkSpec::preset(AlgorithmId algo, ProblemId problem) {
  BenchmarkSpec spec;
  spec.problem = ProblemSpec::preset(problem);
  spec.algorithm = algo;
  spec.algorithm_params = algorithm_preset(algo, problem);
  return spec;
}

std::uint64_t run_seed(std::uint64_t base_seed, std::size_t index) {
  return mix64(base_seed ^ mix64(static_cast<std::uint64_t>(index)));
}

void aggregate(BenchmarkReport& report) {
  report.runs = report.records.size();
  report.successes = 0;
  double sum = 0.0;
  for (const RunRecord& r : report.records) {
    if (!r.success) continue;
    ++report.successes;
    sum += static_cast<double>(r.reported_calls());
  }
  report.avg_calls.reset();
  if (report.successes > 0) report.avg_calls = sum / static_cast<double>(report.successes);
}

BenchmarkReport run_benchmark(const BenchmarkSpec& spec) {
  if (spec.runs == 0) throw ConfigInvalid("run count must be at least 1");
  const std::size_t dim = spec.problem.dimension();
  const AlgorithmConfig cfg = build_algorithm_config(spec.algorithm, spec.algorithm_params, dim);
  const std::uint64_t max_calls = spec.problem.max_calls();
  // Surface problem configuration errors once, before any run starts.
  (void)make_problem(spec.problem, run_seed(spec.base_seed, 0));

  BenchmarkReport report;
  report.problem = std::string(problem_name(spec.problem.id));
  report.algorithm = std::string(algorithm_name(spec.algorithm));
  report.dim = dim;
  report.base_seed = spec.base_seed;
  report.records.resize(spec.runs);
  std::vector<std::string> errors(spec.runs);

  const auto started = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < spec.runs; i = next++) {
      const std::uint64_t seed = run_seed(spec.base_seed, i);
      try {
        const auto problem = make_problem(spec.problem, seed);
        report.records[i] = run_algorithm(cfg, *problem, seed, max_calls);
      } catch (const std::exception& e) {
        RunRecord failed;
        failed.seed = seed;
        failed.best_value = std::numeric_limits<double>::quiet_NaN();
        report.records[i] = failed;
        errors[i] = "run " + std::to_string(i) + ": " + e.what();
      }
    }
  };
  std::size_t workers = spec.workers == 0 ? std::thread::hardware_concurrency() : spec.workers;
  workers = std::clamp<std::size_t>(workers, 1, spec.runs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  for (auto& e : errors) {
    if (!e.empty()) report.errors.push_back(std::move(e));
  }
  aggregate(report);
  return report;
}

std::vector<ScalingRow> scaling_study(AlgorithmId algo, const std::vector<std::size_t>& dims,
                                      std::size_t runs, std::uint64_t base_seed,
                                      std::size_t workers, const ParamSet& algorithm_overrides,
                                      const ParamSet& problem_overrides) {
  std::vector<ScalingRow> rows;
  rows.reserve(dims.size());
  for (std::size_t dim : dims) {
    BenchmarkSpec spec = BenchmarkSpec::preset(algo, ProblemId::type0);
    spec.problem.params.merge(problem_overrides);
    spec.problem.params.set("dim", std::to_string(dim));
    spec.algorithm_params.merge(algorithm_overrides);
    spec.runs = runs;
    spec.base_seed = base_seed;
    spec.workers = workers;
    rows.push_back({dim, run_benchmark(spec)});
  }
  return rows;
}

}  // namespace evo
