#include "evo/harness/presets.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <string>

#include "evo/core/errors.hpp"
#include "evo/core/rng.hpp"
#include "evo/problems/beam.hpp"
#include "evo/problems/chebyshev.hpp"
#include "evo/problems/puc.hpp"
#include "evo/problems/type0.hpp"

namespace evo {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

ParamSet params(std::initializer_list<std::pair<const char*, const char*>> list) {
  ParamSet p;
  for (const auto& [k, v] : list) p.set(k, v);
  return p;
}

// Salt that separates the instance stream from the search stream of a run.
constexpr std::uint64_t kInstanceSalt = 0x1f83d9abfb41bd6bULL;

class Resolver {
 public:
  Resolver(const ParamSet& params, ParamVariables vars, std::string_view algo)
      : params_(params), vars_(std::move(vars)), algo_(algo) {}

  double real(std::string_view key) {
    used_.insert(std::string(key));
    try {
      return eval_param(params_.get(key), vars_);
    } catch (const ConfigInvalid& e) {
      throw ConfigInvalid(std::string(algo_) + ": " + std::string(key) + ": " + e.what());
    }
  }

  std::size_t count(std::string_view key) {
    const double v = real(key);
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e12) {
      throw ConfigInvalid(std::string(algo_) + ": " + std::string(key) +
                          " must be a non-negative integer");
    }
    return static_cast<std::size_t>(v);
  }

  /// A positive number or the word "grid".
  double precision(std::string_view key, bool& grid) {
    const auto raw = params_.find(key);
    if (raw && lowercase(*raw) == "grid") {
      used_.insert(std::string(key));
      grid = true;
      return 1.0;
    }
    grid = false;
    return real(key);
  }

  void define(std::string name, double value) { vars_[std::move(name)] = value; }

  void reject_unknown() const {
    for (const auto& [k, v] : params_.entries()) {
      if (!used_.contains(k)) {
        throw ConfigInvalid(std::string(algo_) + ": unknown parameter '" + k + "'");
      }
    }
  }

 private:
  const ParamSet& params_;
  ParamVariables vars_;
  std::string_view algo_;
  std::set<std::string> used_;
};

}  // namespace

std::string_view problem_name(ProblemId id) {
  switch (id) {
    case ProblemId::chebyshev: return "chebyshev";
    case ProblemId::type0: return "type0";
    case ProblemId::beam: return "beam";
    case ProblemId::puc: return "puc";
  }
  return "unknown";
}

ProblemId parse_problem(std::string_view name) {
  const std::string lower = lowercase(name);
  for (ProblemId id : kAllProblems) {
    if (lower == problem_name(id)) return id;
  }
  throw UnknownProblem(std::string(name));
}

Termination termination_presets(ProblemId id) {
  switch (id) {
    case ProblemId::chebyshev: return {1e-5, 100'000};
    case ProblemId::type0: return {1e-3, 5'000'000};
    case ProblemId::beam: return {default_beam_target(), 1'000'000};
    case ProblemId::puc: return {6e-5, 400'000};
  }
  throw UnknownProblem(std::to_string(static_cast<int>(id)));
}

ParamSet problem_preset(ProblemId id) {
  switch (id) {
    case ProblemId::chebyshev:
      return params({{"degree", "8"}, {"grid_points", "1000"}, {"threshold", "1e-5"},
                     {"max_calls", "100000"}});
    case ProblemId::type0:
      return params({{"dim", "10"}, {"threshold", "1e-3"}, {"max_calls", "5000000"}});
    case ProblemId::beam:
      return params({{"target", "reference"}, {"max_calls", "1000000"}});
    case ProblemId::puc:
      return params({{"reference", "builtin"}, {"radii", "10"}, {"threshold", "6e-5"},
                     {"max_calls", "400000"}});
  }
  throw UnknownProblem(std::to_string(static_cast<int>(id)));
}

ParamSet algorithm_preset(AlgorithmId algo, ProblemId problem) {
  const bool beam = problem == ProblemId::beam;
  switch (algo) {
    case AlgorithmId::de:
      switch (problem) {
        case ProblemId::chebyshev:
        case ProblemId::type0:
          return params({{"pop_size", "10*dim"}, {"F1", "0.85"}, {"F2", "0.85"}, {"CR", "1"}});
        case ProblemId::beam:
          return params({{"pop_size", "11*dim"}, {"F1", "0.85"}, {"F2", "0.85"}, {"CR", "0.1"}});
        case ProblemId::puc:
          return params({{"pop_size", "10*dim"}, {"F1", "0.75"}, {"F2", "0.75"}, {"CR", "1"}});
      }
      break;
    case AlgorithmId::sade: {
      ParamSet p;
      switch (problem) {
        case ProblemId::chebyshev:
          p = params({{"pop_size", "10*dim"}, {"CR", "0.44"}, {"radioactivity", "0"}, {"MR", "0.5"}});
          break;
        case ProblemId::type0:
          p = params({{"pop_size", "25*dim"}, {"CR", "0.1"}, {"radioactivity", "0.05"}, {"MR", "0.5"}});
          break;
        case ProblemId::beam:
          p = params({{"pop_size", "10*dim"}, {"CR", "0.3"}, {"radioactivity", "0.05"}, {"MR", "0.5"}});
          break;
        case ProblemId::puc:
          p = params({{"pop_size", "10*dim"}, {"CR", "0.2"}, {"radioactivity", "0.3"}, {"MR", "0.5"}});
          break;
      }
      p.set("local_range", "0.0025");
      return p;
    }
    case AlgorithmId::rasa:
      if (beam) {
        return params({{"pop_size", "64"}, {"q", "0.04"},
                       {"p_uni_mut", "0.525"}, {"p_bnd_mut", "0.125"},
                       {"p_nun_mut", "0.125"}, {"p_mnu_mut", "0.125"},
                       {"p_smp_crs", "0.025"}, {"p_sar_crs", "0.025"},
                       {"p_war_crs", "0.025"}, {"p_heu_crs", "0.025"},
                       {"b", "0.25"}, {"T_frac", "1e-2"}, {"T_frac_min", "1e-4"},
                       {"T_mult", "0.9"}, {"num_success_max", "10*pop_size"},
                       {"num_counter_max", "50*pop_size"}, {"num_heu_max", "20"},
                       {"precision", "grid"}});
      }
      return params({{"pop_size", "32"}, {"q", "0.04"},
                     {"p_uni_mut", "0.05"}, {"p_bnd_mut", "0.05"},
                     {"p_nun_mut", "0.05"}, {"p_mnu_mut", "0.05"},
                     {"p_smp_crs", "0.15"}, {"p_sar_crs", "0.15"},
                     {"p_war_crs", "0.15"}, {"p_heu_crs", "0.35"},
                     {"b", "2.0"}, {"T_frac", "1e-10"}, {"T_frac_min", "1e-14"},
                     {"T_mult", "0.9"}, {"num_success_max", "10*pop_size"},
                     {"num_counter_max", "50*pop_size"}, {"num_heu_max", "20"},
                     // The type-0 success region is narrower than 1e-4.
                     {"precision", problem == ProblemId::type0 ? "1e-7" : "1e-4"}});
    case AlgorithmId::iasa:
      switch (problem) {
        case ProblemId::chebyshev:
          return params({{"OldSize", "80"}, {"NewSize", "5"}, {"T_max", "1e-5"}, {"T_min", "1e-7"},
                         {"SuccessMax", "1000"}, {"CounterMax", "5000"},
                         {"TminAtCallsRate", "19%"}, {"MaxCalls", "0"},
                         {"CrossoverProb", "97%"}, {"CR", "0.5"}, {"precision", "1e-3"}});
        case ProblemId::type0:
          return params({{"OldSize", "900"}, {"NewSize", "600"}, {"T_max", "1e-5"},
                         {"T_min", "1e-10"}, {"SuccessMax", "1000"}, {"CounterMax", "5000"},
                         {"TminAtCallsRate", "100%"}, {"MaxCalls", "0"},
                         {"CrossoverProb", "92%"}, {"CR", "0.6"}, {"precision", "1e-6"}});
        case ProblemId::beam:
          return params({{"OldSize", "180"}, {"NewSize", "250"}, {"T_max", "1e-4"},
                         {"T_min", "1e-5"}, {"SuccessMax", "1000"}, {"CounterMax", "5000"},
                         {"TminAtCallsRate", "25%"}, {"MaxCalls", "0"},
                         {"CrossoverProb", "60%"}, {"CR", "1.3"}, {"precision", "grid"}});
        case ProblemId::puc:
          return params({{"OldSize", "200"}, {"NewSize", "100"}, {"T_max", "1e-1"},
                         {"T_min", "1e-5"}, {"SuccessMax", "1000"}, {"CounterMax", "5000"},
                         {"TminAtCallsRate", "20%"}, {"MaxCalls", "0"},
                         {"CrossoverProb", "90%"}, {"CR", "1.0"}, {"precision", "1e-3"}});
      }
      break;
  }
  throw ConfigInvalid("no preset for this algorithm/problem pair");
}

AlgorithmConfig build_algorithm_config(AlgorithmId algo, const ParamSet& p, std::size_t dim) {
  Resolver r(p, {{"dim", static_cast<double>(dim)}}, algorithm_name(algo));
  AlgorithmConfig result;
  switch (algo) {
    case AlgorithmId::de: {
      DeConfig c;
      c.pop_size = r.count("pop_size");
      c.f1 = r.real("F1");
      c.f2 = p.contains("F2") ? r.real("F2") : c.f1;
      c.cr = r.real("CR");
      result = c;
      break;
    }
    case AlgorithmId::sade: {
      SadeConfig c;
      c.pop_size = r.count("pop_size");
      c.cr = r.real("CR");
      c.radioactivity = r.real("radioactivity");
      c.mutation_rate = r.real("MR");
      if (p.contains("local_range")) c.local_range = r.real("local_range");
      result = c;
      break;
    }
    case AlgorithmId::rasa: {
      RasaConfig c;
      c.pop_size = r.count("pop_size");
      r.define("pop_size", static_cast<double>(c.pop_size));
      c.q = r.real("q");
      static constexpr const char* kOps[] = {"p_uni_mut", "p_bnd_mut", "p_nun_mut", "p_mnu_mut",
                                             "p_smp_crs", "p_sar_crs", "p_war_crs", "p_heu_crs"};
      for (std::size_t i = 0; i < kRasaOperatorCount; ++i) c.operator_probability[i] = r.real(kOps[i]);
      c.b = r.real("b");
      c.t_frac = r.real("T_frac");
      c.t_frac_min = r.real("T_frac_min");
      c.t_mult = r.real("T_mult");
      c.success_max = r.count("num_success_max");
      c.counter_max = r.count("num_counter_max");
      c.num_heu_max = r.count("num_heu_max");
      c.precision = r.precision("precision", c.grid_precision);
      result = c;
      break;
    }
    case AlgorithmId::iasa: {
      IasaConfig c;
      c.old_size = r.count("OldSize");
      c.new_size = r.count("NewSize");
      c.t_max = r.real("T_max");
      c.t_min = r.real("T_min");
      c.success_max = r.count("SuccessMax");
      c.counter_max = r.count("CounterMax");
      c.tmin_at_calls_rate = r.real("TminAtCallsRate");
      if (p.contains("MaxCalls")) c.max_calls = r.count("MaxCalls");
      c.crossover_prob = r.real("CrossoverProb");
      c.cr = r.real("CR");
      c.precision = r.precision("precision", c.grid_precision);
      result = c;
      break;
    }
  }
  r.reject_unknown();
  std::visit([](const auto& c) { c.validate(); }, result);
  return result;
}

std::size_t ProblemSpec::dimension() const {
  switch (id) {
    case ProblemId::chebyshev: {
      const auto degree = params.find("degree");
      return static_cast<std::size_t>(degree ? eval_param(*degree) : 8.0) + 1;
    }
    case ProblemId::type0: {
      const auto d = params.find("dim");
      return static_cast<std::size_t>(d ? eval_param(*d) : 10.0);
    }
    case ProblemId::beam:
      return beam_var::count;
    case ProblemId::puc: {
      const auto ref = params.find("reference");
      if (!ref || *ref == "builtin") return 2 * builtin_puc_reference().points.size();
      return 2 * load_puc_reference(*ref).points.size();
    }
  }
  throw UnknownProblem(std::to_string(static_cast<int>(id)));
}

std::uint64_t ProblemSpec::max_calls() const {
  const auto v = params.find("max_calls");
  if (!v) return termination_presets(id).max_calls;
  const double calls = eval_param(*v);
  if (!(calls >= 0.0) || calls != std::floor(calls)) {
    throw ConfigInvalid("max_calls must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(calls);
}

std::unique_ptr<Problem> make_problem(const ProblemSpec& spec, std::uint64_t run_seed) {
  const Termination term = termination_presets(spec.id);
  auto number = [&](std::string_view key, double fallback) {
    const auto v = spec.params.find(key);
    return v ? eval_param(*v) : fallback;
  };
  std::set<std::string, std::less<>> known{"max_calls", "threshold"};
  std::unique_ptr<Problem> problem;
  switch (spec.id) {
    case ProblemId::chebyshev: {
      known.insert({"degree", "grid_points"});
      ChebyshevSettings s;
      s.degree = static_cast<int>(number("degree", s.degree));
      s.grid_points = static_cast<std::size_t>(number("grid_points", static_cast<double>(s.grid_points)));
      s.threshold = number("threshold", term.threshold);
      problem = std::make_unique<ChebyshevProblem>(s);
      break;
    }
    case ProblemId::type0: {
      known.insert("dim");
      RngStream rng(mix64(run_seed ^ kInstanceSalt));
      const auto dim = spec.dimension();
      if (dim == 0) throw ConfigInvalid("type0: dim must be positive");
      Type0Problem base = Type0Problem::random_instance(dim, rng);
      problem = std::make_unique<Type0Problem>(base.x0(), base.y0(), base.r0(),
                                               number("threshold", term.threshold));
      break;
    }
    case ProblemId::beam: {
      known.insert("target");
      BeamSettings s;
      const auto target = spec.params.find("target");
      s.target = (!target || *target == "reference") ? default_beam_target() : eval_param(*target);
      problem = std::make_unique<BeamProblem>(s);
      break;
    }
    case ProblemId::puc: {
      known.insert({"reference", "radii"});
      const auto ref = spec.params.find("reference");
      const PucReference reference =
          (!ref || *ref == "builtin") ? builtin_puc_reference() : load_puc_reference(*ref);
      problem = std::make_unique<PucProblem>(
          reference, static_cast<std::size_t>(number("radii", 10.0)), number("threshold", term.threshold));
      break;
    }
  }
  for (const auto& [k, v] : spec.params.entries()) {
    if (!known.contains(k)) {
      throw ConfigInvalid(std::string(problem_name(spec.id)) + ": unknown parameter '" + k + "'");
    }
  }
  return problem;
}

std::string algorithm_section(AlgorithmId algo, ProblemId problem) {
  return std::string(algorithm_name(algo)) + "." + std::string(problem_name(problem));
}

std::string problem_section(ProblemId problem) {
  return "problem." + std::string(problem_name(problem));
}

ConfigFile preset_config(std::optional<AlgorithmId> only) {
  ConfigFile file;
  for (AlgorithmId algo : kAllAlgorithms) {
    if (only && *only != algo) continue;
    for (ProblemId problem : kAllProblems) {
      file.sections.emplace_back(algorithm_section(algo, problem), algorithm_preset(algo, problem));
    }
  }
  for (ProblemId problem : kAllProblems) {
    file.sections.emplace_back(problem_section(problem), problem_preset(problem));
  }
  return file;
}

}  // namespace evo
