#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "evo/core/problem.hpp"
#include "evo/core/rng.hpp"
#include "evo/core/types.hpp"

namespace evo {

/// Maps real variables to integers: y = trunc(x / p), x = y p.
class IntegerCodec {
 public:
  /// Integer bounds are the smallest and largest multiples of p_j inside
  /// the real box.
  IntegerCodec(std::vector<double> precision, const Bounds& bounds);
  static IntegerCodec uniform(double precision, const Bounds& bounds);

  std::size_t size() const { return precision_.size(); }
  double precision(std::size_t j) const { return precision_[j]; }
  std::span<const double> precision() const { return precision_; }
  double lower(std::size_t j) const { return lower_[j]; }
  double upper(std::size_t j) const { return upper_[j]; }

  /// Integer part of x_j / p_j. Quotients within 1e-9 (relative) of an
  /// integer are taken as that integer, so grid values encode exactly.
  double encode(double x, std::size_t j) const;
  Chromosome encode(const Chromosome& x) const;
  Chromosome decode(const Chromosome& y) const;
  /// Clamps an integer chromosome to the encoded bounds.
  void clamp(Chromosome& y) const;

 private:
  std::vector<double> precision_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

struct IasaConfig {
  std::size_t old_size = 80;
  std::size_t new_size = 5;
  double t_max = 1e-5;
  double t_min = 1e-7;
  std::size_t success_max = 1000;
  std::size_t counter_max = 5000;
  double tmin_at_calls_rate = 0.19;
  /// MaxCalls in the cooling exponent. Zero means the run's call budget.
  std::uint64_t max_calls = 0;
  double crossover_prob = 0.97;
  double cr = 0.5;
  /// Codec precision: one value for every variable, or the problem's grid
  /// steps when `grid_precision` is set and the problem is grid encoded.
  double precision = 1e-3;
  bool grid_precision = false;

  void validate() const;
};

/// CH_p + u (CH_q - CH_r) with the given scalar u, rounded to integers and
/// clamped.
Chromosome iasa_differential_crossover(const Chromosome& p, const Chromosome& q,
                                       const Chromosome& r, double u, const IntegerCodec& codec);
/// Same with u drawn once from u(0, CR).
Chromosome iasa_differential_crossover(const Chromosome& p, const Chromosome& q,
                                       const Chromosome& r, double cr, const IntegerCodec& codec,
                                       RngStream& rng);

/// ch_j + round(N(0, |ch_j - partner_j| / 2 + 1)) per coordinate, clamped.
Chromosome iasa_mutate(const Chromosome& c, const Chromosome& partner, const IntegerCodec& codec,
                       RngStream& rng);

/// Logistic acceptance oriented for minimization:
/// P = 1 / (1 + exp((new - old) / T)). Equal fitness gives exactly 1/2.
double iasa_accept_probability(double old_fitness, double new_fitness, double temperature);
bool iasa_accept(double old_fitness, double new_fitness, double temperature, RngStream& rng);

/// T (T_min / T_max)^(CounterMax / (TminAtCallsRate MaxCalls)); returns
/// T_max when the result is at or below T_min.
double iasa_cool(double temperature, const IasaConfig& cfg, std::uint64_t max_calls);

struct IasaCounters {
  std::uint64_t crossovers = 0;
  std::uint64_t mutations = 0;
  std::uint64_t accepted = 0;
  std::uint64_t coolings = 0;
  std::uint64_t reannealings = 0;
};

/// Integer augmented simulated annealing.
class Iasa {
 public:
  Iasa(const IasaConfig& cfg, Evaluator& evaluator, RngStream& rng);

  void initialize();
  /// One wave: NewSize children from the current old population, each
  /// compared against a distinct old parent, then the cooling gates.
  void wave();
  void run();

  const IntegerCodec& codec() const { return codec_; }
  /// Integer chromosomes with their fitness.
  const Population& population() const { return pop_; }
  double temperature() const { return temperature_; }
  const IasaCounters& counters() const { return counters_; }

 private:
  double evaluate(const Chromosome& y);
  std::size_t next_parent();

  IasaConfig cfg_;
  Evaluator& ev_;
  RngStream& rng_;
  IntegerCodec codec_;
  std::uint64_t max_calls_;
  Population pop_;
  double temperature_ = 0.0;
  std::size_t stage_accepted_ = 0;
  std::size_t stage_steps_ = 0;
  std::vector<std::size_t> parent_order_;
  std::size_t parent_cursor_ = 0;
  IasaCounters counters_;
};

RunRecord run_iasa(const Problem& problem, const IasaConfig& cfg, std::uint64_t seed,
                   std::uint64_t max_calls);

}  // namespace evo
