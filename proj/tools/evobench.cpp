// evobench: single runs, benchmark campaigns and the type-0 scaling study.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evo/core/errors.hpp"
#include "evo/harness/benchmark.hpp"
#include "evo/harness/presets.hpp"
#include "evo/harness/report.hpp"
#include "evo/kernels/kernels.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Usage problems detected after flag parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string problem = "chebyshev";
  std::string algo = "de";
  std::size_t dim = 0;
  std::size_t runs = 100;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::string out;
  std::string preset;
  std::vector<std::string> sets;
  std::string dims = "10,30,50,100";
};

template <typename T>
std::vector<T> select_ids(const std::string& text, auto parse, const auto& all) {
  if (text == "all") return {std::begin(all), std::end(all)};
  std::vector<T> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) ids.push_back(parse(item));
  if (ids.empty()) throw UsageError("empty selection '" + text + "'");
  return ids;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v == 0) throw UsageError("--dims: bad dimension '" + item + "'");
    if (!dims.empty() && v <= dims.back()) throw UsageError("--dims must be strictly ascending");
    dims.push_back(v);
  }
  return dims;
}

/// Preset spec for one pair with the config file and --set overrides applied.
/// Keys prefixed with "problem." address the problem parameters.
evo::BenchmarkSpec build_spec(const Options& opt, evo::AlgorithmId algo, evo::ProblemId problem,
                              const evo::ConfigFile* file) {
  evo::BenchmarkSpec spec = evo::BenchmarkSpec::preset(algo, problem);
  if (file != nullptr) {
    if (const auto* p = file->section(evo::algorithm_section(algo, problem))) {
      spec.algorithm_params = *p;
    }
    if (const auto* p = file->section(evo::problem_section(problem))) spec.problem.params = *p;
  }
  for (const auto& s : opt.sets) {
    auto [key, value] = evo::parse_assignment(s);
    constexpr std::string_view kPrefix = "problem.";
    if (key.starts_with(kPrefix)) {
      spec.problem.params.set(key.substr(kPrefix.size()), value);
    } else {
      spec.algorithm_params.set(key, value);
    }
  }
  if (opt.dim != 0) {
    if (problem == evo::ProblemId::type0) {
      spec.problem.params.set("dim", std::to_string(opt.dim));
    } else if (opt.dim != spec.problem.dimension()) {
      throw UsageError("--dim " + std::to_string(opt.dim) + " does not match " +
                       std::string(evo::problem_name(problem)) + " (dimension " +
                       std::to_string(spec.problem.dimension()) + ")");
    }
  }
  spec.runs = opt.runs;
  spec.base_seed = opt.seed;
  spec.workers = opt.workers;
  // Fail on bad parameters before anything runs or is written.
  (void)evo::build_algorithm_config(algo, spec.algorithm_params, spec.problem.dimension());
  (void)evo::make_problem(spec.problem, evo::run_seed(spec.base_seed, 0));
  if (spec.runs == 0) throw UsageError("--runs must be at least 1");
  return spec;
}

std::string join_genes(const evo::Chromosome& c) {
  std::string s;
  char buf[64];
  for (std::size_t j = 0; j < c.size(); ++j) {
    std::snprintf(buf, sizeof buf, "%s%.10g", j ? " " : "", c[j]);
    s += buf;
  }
  return s;
}

int cmd_run(const Options& opt, const evo::ConfigFile* file) {
  const auto algo = evo::parse_algorithm(opt.algo);
  const auto problem_id = evo::parse_problem(opt.problem);
  evo::BenchmarkSpec spec = build_spec(opt, algo, problem_id, file);
  const std::size_t dim = spec.problem.dimension();
  const auto cfg = evo::build_algorithm_config(algo, spec.algorithm_params, dim);
  const std::uint64_t seed = evo::run_seed(spec.base_seed, 0);
  const auto problem = evo::make_problem(spec.problem, seed);
  const evo::RunRecord rec = evo::run_algorithm(cfg, *problem, seed, spec.problem.max_calls());
  std::printf("problem=%s algorithm=%s dim=%zu seed=%llu\n", std::string(evo::problem_name(problem_id)).c_str(),
              std::string(evo::algorithm_name(algo)).c_str(), dim,
              static_cast<unsigned long long>(rec.seed));
  std::printf("success=%d calls=%llu calls_used=%llu best_value=%.12g\n", rec.success ? 1 : 0,
              static_cast<unsigned long long>(rec.reported_calls()),
              static_cast<unsigned long long>(rec.calls_used), rec.best_value);
  std::printf("best=%s\n", join_genes(rec.best_chromosome).c_str());
  return kExitOk;
}

void write_reports(const std::string& dir, const std::vector<evo::BenchmarkReport>& reports,
                   const std::string& stem) {
  if (dir.empty()) return;
  const std::filesystem::path out(dir);
  evo::write_text_file(out / (stem + ".csv"), evo::summary_csv(reports));
  evo::write_text_file(out / (stem + ".json"), evo::report_json(reports));
  for (const auto& r : reports) {
    evo::write_text_file(out / ("runs_" + r.algorithm + "_" + r.problem + "_d" +
                                std::to_string(r.dim) + ".csv"),
                         evo::runs_csv(r));
  }
}

int cmd_bench(const Options& opt, const evo::ConfigFile* file) {
  const auto algos = select_ids<evo::AlgorithmId>(opt.algo, evo::parse_algorithm, evo::kAllAlgorithms);
  const auto problems = select_ids<evo::ProblemId>(opt.problem, evo::parse_problem, evo::kAllProblems);
  std::vector<evo::BenchmarkSpec> specs;
  for (auto p : problems) {
    for (auto a : algos) specs.push_back(build_spec(opt, a, p, file));
  }
  std::vector<evo::BenchmarkReport> reports;
  for (const auto& spec : specs) {
    reports.push_back(evo::run_benchmark(spec));
    for (const auto& e : reports.back().errors) std::cerr << "warning: " << e << '\n';
  }
  write_reports(opt.out, reports, "summary");
  std::cout << evo::summary_csv(reports);
  return kExitOk;
}

int cmd_scale(const Options& opt, const evo::ConfigFile* file) {
  const auto algo = evo::parse_algorithm(opt.algo);
  const auto dims = parse_dims(opt.dims);
  evo::ParamSet algo_overrides;
  evo::ParamSet problem_overrides;
  if (file != nullptr) {
    if (const auto* p = file->section(evo::algorithm_section(algo, evo::ProblemId::type0))) {
      algo_overrides = *p;
    }
    if (const auto* p = file->section(evo::problem_section(evo::ProblemId::type0))) {
      problem_overrides = *p;
    }
  }
  for (const auto& s : opt.sets) {
    auto [key, value] = evo::parse_assignment(s);
    if (key.starts_with("problem.")) {
      problem_overrides.set(key.substr(8), value);
    } else {
      algo_overrides.set(key, value);
    }
  }
  // Validate every dimension before the first campaign starts.
  for (std::size_t d : dims) {
    evo::BenchmarkSpec spec = evo::BenchmarkSpec::preset(algo, evo::ProblemId::type0);
    spec.algorithm_params.merge(algo_overrides);
    spec.problem.params.merge(problem_overrides);
    spec.problem.params.set("dim", std::to_string(d));
    (void)evo::build_algorithm_config(algo, spec.algorithm_params, d);
    (void)evo::make_problem(spec.problem, evo::run_seed(opt.seed, 0));
  }
  if (opt.runs == 0) throw UsageError("--runs must be at least 1");
  const auto rows = evo::scaling_study(algo, dims, opt.runs, opt.seed, opt.workers,
                                       algo_overrides, problem_overrides);
  std::vector<evo::BenchmarkReport> reports;
  for (const auto& row : rows) reports.push_back(row.report);
  if (!opt.out.empty()) {
    write_reports(opt.out, reports, "scaling");
    evo::write_text_file(std::filesystem::path(opt.out) / "scaling.dat", evo::scaling_plot_data(rows));
  }
  std::cout << evo::summary_csv(reports);
  return kExitOk;
}

int cmd_presets(const Options& opt) {
  std::optional<evo::AlgorithmId> only;
  if (!opt.algo.empty() && opt.algo != "all") only = evo::parse_algorithm(opt.algo);
  const std::string text = evo::format_config(evo::preset_config(only));
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    evo::write_text_file(opt.out, text);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolutionary optimizer benchmark driver"};
  app.require_subcommand(1);
  Options opt;
  std::size_t env_workers = 1;
  if (const char* w = std::getenv("EVOBENCH_WORKERS")) {
    try {
      env_workers = std::stoul(w);
    } catch (const std::exception&) {
      std::cerr << "error: EVOBENCH_WORKERS must be a non-negative integer\n";
      return kExitUsage;
    }
  }
  opt.workers = env_workers;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--problem", opt.problem, "chebyshev, type0, beam, puc");
    cmd->add_option("--algo", opt.algo, "de, sade, rasa, iasa");
    cmd->add_option("--dim", opt.dim, "Problem dimension (type0 only; others are fixed)");
    cmd->add_option("--seed", opt.seed, "Base seed");
    cmd->add_option("--preset", opt.preset, "Config file with parameter overrides")->check(CLI::ExistingFile);
    cmd->add_option("--set", opt.sets, "Override a parameter, key=value (problem.key for the problem)");
  };
  auto* run = app.add_subcommand("run", "Run one optimization and print its record");
  add_common(run);
  auto* bench = app.add_subcommand("bench", "Run a benchmark campaign (comma lists or 'all')");
  add_common(bench);
  bench->add_option("--runs", opt.runs, "Runs per algorithm/problem pair");
  bench->add_option("--workers", opt.workers, "Parallel runs (0 = hardware threads)");
  bench->add_option("--out", opt.out, "Output directory for CSV and JSON reports");
  auto* scale = app.add_subcommand("scale", "Type-0 scaling study over dimensions");
  scale->add_option("--algo", opt.algo, "de, sade, rasa, iasa");
  scale->add_option("--dims", opt.dims, "Ascending comma-separated dimensions");
  scale->add_option("--runs", opt.runs, "Runs per dimension");
  scale->add_option("--seed", opt.seed, "Base seed");
  scale->add_option("--workers", opt.workers, "Parallel runs (0 = hardware threads)");
  scale->add_option("--out", opt.out, "Output directory for tables and plot data");
  scale->add_option("--preset", opt.preset, "Config file with parameter overrides")->check(CLI::ExistingFile);
  scale->add_option("--set", opt.sets, "Override a parameter, key=value");
  auto* presets = app.add_subcommand("presets", "Print the parameter presets as a config file");
  presets->add_option("--algo", opt.algo, "Limit to one algorithm");
  presets->add_option("--out", opt.out, "Write to a file instead of stdout");
  app.add_flag_callback("--kernels-info", [] {
    std::cout << "active kernels: " << evo::kernels::isa_name(evo::kernels::active_isa()) << '\n';
  }, "Print the active kernel instruction set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (presets->parsed() && presets->count("--algo") == 0) opt.algo = "all";

  evo::ConfigFile file;
  const evo::ConfigFile* file_ptr = nullptr;
  try {
    if (!opt.preset.empty()) {
      file = evo::load_config(opt.preset);
      file_ptr = &file;
    }
    if (run->parsed()) return cmd_run(opt, file_ptr);
    if (bench->parsed()) return cmd_bench(opt, file_ptr);
    if (scale->parsed()) return cmd_scale(opt, file_ptr);
    return cmd_presets(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const evo::ConfigInvalid& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const evo::UnknownProblem& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
