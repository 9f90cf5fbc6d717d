#include "evo/algo/algorithm.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "evo/core/errors.hpp"

namespace evo {

std::string_view algorithm_name(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::de: return "de";
    case AlgorithmId::sade: return "sade";
    case AlgorithmId::rasa: return "rasa";
    case AlgorithmId::iasa: return "iasa";
  }
  return "unknown";
}

AlgorithmId parse_algorithm(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (AlgorithmId id : kAllAlgorithms) {
    if (lower == algorithm_name(id)) return id;
  }
  throw ConfigInvalid("unknown algorithm '" + std::string(name) + "'");
}

AlgorithmId algorithm_of(const AlgorithmConfig& cfg) {
  return static_cast<AlgorithmId>(cfg.index());
}

RunRecord run_algorithm(const AlgorithmConfig& cfg, const Problem& problem, std::uint64_t seed,
                        std::uint64_t max_calls) {
  struct Visitor {
    const Problem& problem;
    std::uint64_t seed;
    std::uint64_t max_calls;
    RunRecord operator()(const DeConfig& c) const { return run_de(problem, c, seed, max_calls); }
    RunRecord operator()(const SadeConfig& c) const { return run_sade(problem, c, seed, max_calls); }
    RunRecord operator()(const RasaConfig& c) const { return run_rasa(problem, c, seed, max_calls); }
    RunRecord operator()(const IasaConfig& c) const { return run_iasa(problem, c, seed, max_calls); }
  };
  return std::visit(Visitor{problem, seed, max_calls}, cfg);
}

}  // namespace evo
