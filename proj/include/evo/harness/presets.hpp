#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "evo/algo/algorithm.hpp"
#include "evo/core/problem.hpp"
#include "evo/harness/config.hpp"

namespace evo {

enum class ProblemId { chebyshev, type0, beam, puc };
inline constexpr ProblemId kAllProblems[] = {ProblemId::chebyshev, ProblemId::type0,
                                              ProblemId::beam, ProblemId::puc};

std::string_view problem_name(ProblemId id);
/// Case-insensitive; throws UnknownProblem.
ProblemId parse_problem(std::string_view name);

struct Termination {
  double threshold;
  std::uint64_t max_calls;
};

/// Success threshold and call cap per benchmark. The beam threshold is the
/// reference-relative target.
Termination termination_presets(ProblemId id);

/// Problem parameters with their defaults: termination values, instance
/// sizes and data sources.
ParamSet problem_preset(ProblemId id);

/// Algorithm parameters for one benchmark, keyed by their customary names
/// (pop_size, F1, CR, T_frac, OldSize, TminAtCallsRate, ...). Values may be
/// expressions in `dim` and, for RASA, `pop_size`.
ParamSet algorithm_preset(AlgorithmId algo, ProblemId problem);

/// Resolves a parameter set into a validated configuration. Unknown keys
/// and malformed values raise ConfigInvalid.
AlgorithmConfig build_algorithm_config(AlgorithmId algo, const ParamSet& params, std::size_t dim);

/// Problem identity plus its parameter set.
struct ProblemSpec {
  ProblemId id = ProblemId::chebyshev;
  ParamSet params;

  static ProblemSpec preset(ProblemId id) { return {id, problem_preset(id)}; }
  std::size_t dimension() const;
  std::uint64_t max_calls() const;
};

/// Builds the problem instance for one run. Randomized instances (type-0)
/// are derived from `run_seed`, so every run owns a reproducible instance.
std::unique_ptr<Problem> make_problem(const ProblemSpec& spec, std::uint64_t run_seed);

/// Section names used in config files: "<algo>.<problem>" and
/// "problem.<problem>".
std::string algorithm_section(AlgorithmId algo, ProblemId problem);
std::string problem_section(ProblemId problem);

/// Every preset as an editable config file, optionally for one algorithm.
ConfigFile preset_config(std::optional<AlgorithmId> only = std::nullopt);

}  // namespace evo
