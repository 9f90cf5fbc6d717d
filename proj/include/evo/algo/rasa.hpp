#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "evo/core/problem.hpp"
#include "evo/core/rng.hpp"
#include "evo/core/types.hpp"

namespace evo {

enum class RasaOperator : std::size_t {
  uniform_mutation,
  boundary_mutation,
  nonuniform_mutation,
  multi_nonuniform_mutation,
  simple_crossover,
  simple_arithmetic_crossover,
  whole_arithmetic_crossover,
  heuristic_crossover,
};
inline constexpr std::size_t kRasaOperatorCount = 8;

std::string_view rasa_operator_name(RasaOperator op);

struct RasaConfig {
  std::size_t pop_size = 32;
  double q = 0.04;  // probability of selecting the best individual
  /// Indexed by RasaOperator.
  std::array<double, kRasaOperatorCount> operator_probability = {0.05, 0.05, 0.05, 0.05,
                                                                 0.15, 0.15, 0.15, 0.35};
  double b = 2.0;  // non-uniform mutation shape
  double t_frac = 1e-10;
  double t_frac_min = 1e-14;
  double t_mult = 0.9;
  std::size_t success_max = 320;
  std::size_t counter_max = 1600;
  std::size_t num_heu_max = 20;
  /// Max-norm distance under which a candidate counts as identical to a
  /// population member. When `grid_precision` is set and the problem is grid
  /// encoded, candidates are compared on their snapped values instead.
  double precision = 1e-4;
  bool grid_precision = false;

  void validate() const;
};

// Michalewicz operator pool. `k` arguments are 1-based coordinate indices.

Chromosome uniform_mutation(const Chromosome& c, const Bounds& bounds, RngStream& rng);
Chromosome boundary_mutation(const Chromosome& c, const Bounds& bounds, RngStream& rng);
/// Coordinate k moves toward L_k (p < 0.5) or U_k by the fraction
/// f = u(0,1) (T_t / T_0)^b. `temperature_ratio` is T_t / T_0.
Chromosome nonuniform_mutation(const Chromosome& c, const Bounds& bounds,
                               double temperature_ratio, double b, RngStream& rng);
Chromosome multi_nonuniform_mutation(const Chromosome& c, const Bounds& bounds,
                                     double temperature_ratio, double b, RngStream& rng);
std::pair<Chromosome, Chromosome> simple_crossover(const Chromosome& a, const Chromosome& b,
                                                   std::size_t k);
std::pair<Chromosome, Chromosome> simple_crossover(const Chromosome& a, const Chromosome& b,
                                                   RngStream& rng);
std::pair<Chromosome, Chromosome> simple_arithmetic_crossover(const Chromosome& a,
                                                              const Chromosome& b, std::size_t k,
                                                              double p);
std::pair<Chromosome, Chromosome> simple_arithmetic_crossover(const Chromosome& a,
                                                              const Chromosome& b,
                                                              RngStream& rng);
std::pair<Chromosome, Chromosome> whole_arithmetic_crossover(const Chromosome& a,
                                                             const Chromosome& b, double p);
std::pair<Chromosome, Chromosome> whole_arithmetic_crossover(const Chromosome& a,
                                                             const Chromosome& b,
                                                             RngStream& rng);
/// CH_i + p (CH_j - CH_k), redrawing p until the result lies in the box or
/// `max_tries` draws failed, in which case CH_i is returned unchanged.
Chromosome heuristic_crossover(const Chromosome& ci, const Chromosome& cj, const Chromosome& ck,
                               const Bounds& bounds, std::size_t max_tries, RngStream& rng);

/// p_r = q' (1 - q)^(r - 1) for ranks r = 1..n, q' = q / (1 - (1 - q)^n).
std::vector<double> geometric_rank_probabilities(double q, std::size_t n);

/// Draws ranks (0 = best) from the normalized geometric distribution.
class GeometricRanking {
 public:
  GeometricRanking(double q, std::size_t n);
  std::size_t draw(RngStream& rng) const;
  std::span<const double> probabilities() const { return prob_; }

 private:
  std::vector<double> prob_;
  std::vector<double> cumulative_;
};

/// Index into `population` of an individual drawn by its fitness rank.
std::size_t geometric_rank_select(const Population& population, double q, RngStream& rng);

/// Accept when u(0,1) <= exp((old - new) / T).
bool metropolis_accept(double old_fitness, double new_fitness, double temperature,
                       RngStream& rng);

/// True when some member matches the candidate within `precision[j]` in
/// every coordinate.
bool identity_guard(const Chromosome& candidate, std::span<const Chromosome> members,
                    std::span<const double> precision);

struct AnnealState {
  double temperature = 0.0;
  double t_max = 0.0;
  double t_min = 0.0;
  std::size_t accepted = 0;
  std::size_t steps = 0;
  std::size_t coolings = 0;
  std::size_t reannealings = 0;
};

/// Real-valued augmented simulated annealing.
class Rasa {
 public:
  Rasa(const RasaConfig& cfg, Evaluator& evaluator, RngStream& rng);

  /// Random population, temperatures from the mean initial fitness.
  void initialize();
  /// One operator application: dispatch, select parents, build children,
  /// identity check, Metropolis replacement, then the cooling schedule.
  void step();
  void run();

  RasaOperator dispatch();
  const Population& population() const { return pop_; }
  const AnnealState& state() const { return state_; }
  const std::array<std::uint64_t, kRasaOperatorCount>& operator_counts() const { return counts_; }
  /// Temperatures observed right after each cooling step.
  const std::vector<double>& temperature_history() const { return history_; }

 private:
  void offer(Chromosome child, std::size_t parent);
  void cool();
  void reanneal();
  void sort_population();
  Chromosome key_of(const Chromosome& c) const;

  RasaConfig cfg_;
  Evaluator& ev_;
  RngStream& rng_;
  GeometricRanking ranking_;
  Population pop_;            // kept sorted by fitness, best first
  std::vector<Chromosome> keys_;  // identity-comparison form of each member
  std::vector<double> precision_;
  std::array<double, kRasaOperatorCount> cumulative_{};
  std::array<std::uint64_t, kRasaOperatorCount> counts_{};
  AnnealState state_;
  double t0_ = 0.0;
  std::vector<double> history_;
};

RunRecord run_rasa(const Problem& problem, const RasaConfig& cfg, std::uint64_t seed,
                   std::uint64_t max_calls);

}  // namespace evo
