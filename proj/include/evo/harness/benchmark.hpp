#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evo/algo/algorithm.hpp"
#include "evo/core/problem.hpp"
#include "evo/harness/config.hpp"
#include "evo/harness/presets.hpp"

namespace evo {

struct BenchmarkSpec {
  ProblemSpec problem;
  AlgorithmId algorithm = AlgorithmId::de;
  ParamSet algorithm_params;
  std::size_t runs = 100;
  std::uint64_t base_seed = 1;
  /// Parallel runs; 0 picks the hardware concurrency.
  std::size_t workers = 1;

  /// Spec with the preset parameters of both sides.
  static BenchmarkSpec preset(AlgorithmId algo, ProblemId problem);
};

struct BenchmarkReport {
  std::string problem;
  std::string algorithm;
  std::size_t dim = 0;
  std::uint64_t base_seed = 0;
  std::size_t runs = 0;
  std::size_t successes = 0;
  /// Mean calls over successful runs; empty when none succeeded.
  std::optional<double> avg_calls;
  std::vector<RunRecord> records;
  /// Runs that ended with an error other than budget exhaustion.
  std::vector<std::string> errors;
  double wall_seconds = 0.0;
};

/// Seed of run `index`: base_seed mixed with the hashed index. Bound to the
/// index, so worker scheduling cannot change it.
std::uint64_t run_seed(std::uint64_t base_seed, std::size_t index);

/// Aggregates per-run records into the success count and average calls.
void aggregate(BenchmarkReport& report);

/// Executes spec.runs independent runs and aggregates them. Per-run errors
/// are recorded as failed runs; configuration errors throw before any run.
BenchmarkReport run_benchmark(const BenchmarkSpec& spec);

struct ScalingRow {
  std::size_t dim;
  BenchmarkReport report;
};

/// Type-0 campaigns over increasing dimensions with fresh instances per run.
std::vector<ScalingRow> scaling_study(AlgorithmId algo, const std::vector<std::size_t>& dims,
                                      std::size_t runs, std::uint64_t base_seed,
                                      std::size_t workers = 1,
                                      const ParamSet& algorithm_overrides = {},
                                      const ParamSet& problem_overrides = {});

}  // namespace evo
