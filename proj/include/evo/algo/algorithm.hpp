#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include "evo/algo/de.hpp"
#include "evo/algo/iasa.hpp"
#include "evo/algo/rasa.hpp"
#include "evo/algo/sade.hpp"

namespace evo {

enum class AlgorithmId { de, sade, rasa, iasa };
inline constexpr AlgorithmId kAllAlgorithms[] = {AlgorithmId::de, AlgorithmId::sade,
                                                  AlgorithmId::rasa, AlgorithmId::iasa};

std::string_view algorithm_name(AlgorithmId id);
/// Case-insensitive; throws ConfigInvalid for unknown names.
AlgorithmId parse_algorithm(std::string_view name);

using AlgorithmConfig = std::variant<DeConfig, SadeConfig, RasaConfig, IasaConfig>;

AlgorithmId algorithm_of(const AlgorithmConfig& cfg);

/// One seeded run of the configured algorithm on `problem`.
RunRecord run_algorithm(const AlgorithmConfig& cfg, const Problem& problem, std::uint64_t seed,
                        std::uint64_t max_calls);

}  // namespace evo
