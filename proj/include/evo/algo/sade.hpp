#pragma once

#include <cstdint>
#include <span>

#include "evo/core/problem.hpp"
#include "evo/core/rng.hpp"
#include "evo/core/types.hpp"

namespace evo {

/// Simplified atavistic differential evolution: each generation doubles the
/// population with mutants and differential offspring, then shrinks it back
/// with a best-preserving tournament.
struct SadeConfig {
  std::size_t pop_size = 90;
  double cr = 0.44;
  double radioactivity = 0.0;       // per-parent mutation probability
  double mutation_rate = 0.5;       // MR
  double local_range = 0.0025;      // local mutation half-width, fraction of box width

  void validate() const;
};

/// CH = CH_p + CR (CH_q - CH_r), clamped.
Chromosome sade_differential(const Chromosome& p, const Chromosome& q, const Chromosome& r,
                             double cr, const Bounds& bounds);

/// CH = CH_i + MR (RP - CH_i) with RP uniform in the box.
Chromosome sade_mutate(const Chromosome& c, double mutation_rate, const Bounds& bounds,
                       RngStream& rng);

/// gene_j += u(-range_j, range_j) for every j, clamped.
Chromosome sade_local_mutate(const Chromosome& c, std::span<const double> range,
                             const Bounds& bounds, RngStream& rng);

/// Shrinks `pool` to `target` members by repeated random-pair tournaments,
/// discarding the worse of each pair. The best member always survives.
Population sade_select(Population pool, std::size_t target, RngStream& rng);

class Sade {
 public:
  Sade(const SadeConfig& cfg, Evaluator& evaluator, RngStream& rng);

  void initialize();
  void set_population(Population population);
  /// Mutation, local mutation, differential fill-up to 2 * pop_size,
  /// evaluation of the new half, tournament shrink.
  void generation();
  void run();

  const Population& population() const { return pop_; }
  double best_fitness() const;
  /// Sizes observed in the last generation: after doubling and after shrink.
  std::size_t last_doubled_size() const { return last_doubled_; }
  std::size_t last_differential_count() const { return last_differential_; }

 private:
  SadeConfig cfg_;
  Evaluator& ev_;
  RngStream& rng_;
  Population pop_;
  std::vector<double> local_range_;
  std::size_t last_doubled_ = 0;
  std::size_t last_differential_ = 0;
};

RunRecord run_sade(const Problem& problem, const SadeConfig& cfg, std::uint64_t seed,
                   std::uint64_t max_calls);

}  // namespace evo
