#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "evo/core/problem.hpp"
#include "evo/core/rng.hpp"
#include "evo/core/types.hpp"

namespace evo {

/// Differential evolution with best-individual attraction:
///   ch_ij' = ch_ij + F1 (ch_pj - ch_qj) + F2 (ch_best,j - ch_ij)  for j in Lambda
///   ch_ij' = ch_ij                                               otherwise
/// Parents p, q are drawn purely at random; the offspring replaces its parent
/// only on strict improvement.
struct DeConfig {
  std::size_t pop_size = 90;
  double f1 = 0.85;
  double f2 = 0.85;
  double cr = 1.0;  // per-coordinate membership probability of Lambda

  void validate() const;
};

/// Two distinct indices in [0, n), both different from i.
std::pair<std::size_t, std::size_t> de_pick_partners(std::size_t i, std::size_t n, RngStream& rng);

/// Lambda as a membership mask; each coordinate joins with probability cr
/// and one uniformly chosen coordinate is forced in when none did.
std::vector<bool> de_crossover_mask(std::size_t n, double cr, RngStream& rng);

/// Applies the operator with explicit partners and mask, then clamps.
Chromosome de_combine(const Chromosome& parent, const Chromosome& p, const Chromosome& q,
                      const Chromosome& best, const std::vector<bool>& mask, double f1,
                      double f2, const Bounds& bounds);

/// Offspring of population[i]. Throws PopulationTooSmall below 4 members.
Chromosome de_offspring(std::size_t i, const Population& population, std::size_t best,
                        const DeConfig& cfg, const Bounds& bounds, RngStream& rng);

class DifferentialEvolution {
 public:
  DifferentialEvolution(const DeConfig& cfg, Evaluator& evaluator, RngStream& rng);

  /// Random initial population, fully evaluated.
  void initialize();
  /// Start from a given, already evaluated population.
  void set_population(Population population);
  /// One synchronous generation: every member gets one offspring built from
  /// the current generation; replacements are applied afterwards. Stops
  /// early once the evaluator reports success.
  void generation();
  /// Runs generations until success. Budget exhaustion propagates.
  void run();

  const Population& population() const { return pop_; }
  double best_fitness() const;

 private:
  DeConfig cfg_;
  Evaluator& ev_;
  RngStream& rng_;
  Population pop_;
};

RunRecord run_de(const Problem& problem, const DeConfig& cfg, std::uint64_t seed,
                 std::uint64_t max_calls);

}  // namespace evo
