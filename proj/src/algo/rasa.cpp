#include "evo/algo/rasa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "evo/algo/runner.hpp"
#include "evo/core/errors.hpp"

namespace evo {

std::string_view rasa_operator_name(RasaOperator op) {
  switch (op) {
    case RasaOperator::uniform_mutation: return "uniform_mutation";
    case RasaOperator::boundary_mutation: return "boundary_mutation";
    case RasaOperator::nonuniform_mutation: return "nonuniform_mutation";
    case RasaOperator::multi_nonuniform_mutation: return "multi_nonuniform_mutation";
    case RasaOperator::simple_crossover: return "simple_crossover";
    case RasaOperator::simple_arithmetic_crossover: return "simple_arithmetic_crossover";
    case RasaOperator::whole_arithmetic_crossover: return "whole_arithmetic_crossover";
    case RasaOperator::heuristic_crossover: return "heuristic_crossover";
  }
  return "unknown";
}

void RasaConfig::validate() const {
  if (pop_size < 2) throw ConfigInvalid("RASA: pop_size must be at least 2");
  if (!(q > 0.0 && q < 1.0)) throw ConfigInvalid("RASA: q must lie in (0, 1)");
  double sum = 0.0;
  for (double p : operator_probability) {
    if (!(p >= 0.0)) throw ConfigInvalid("RASA: operator probabilities must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ConfigInvalid("RASA: operator probabilities must sum to 1");
  if (!(t_mult > 0.0 && t_mult < 1.0)) throw ConfigInvalid("RASA: T_mult must lie in (0, 1)");
  if (!(t_frac > 0.0 && t_frac_min > 0.0 && t_frac_min < t_frac)) {
    throw ConfigInvalid("RASA: need 0 < T_frac_min < T_frac");
  }
  if (success_max == 0 || counter_max == 0) {
    throw ConfigInvalid("RASA: success_max and counter_max must be positive");
  }
  if (num_heu_max == 0) throw ConfigInvalid("RASA: num_heu_max must be positive");
  if (!(precision > 0.0)) throw ConfigInvalid("RASA: precision must be positive");
}

Chromosome uniform_mutation(const Chromosome& c, const Bounds& bounds, RngStream& rng) {
  Chromosome child = c;
  const std::size_t k = rng.index(c.size());
  child[k] = rng.uniform(bounds.lower(k), bounds.upper(k));
  return child;
}

Chromosome boundary_mutation(const Chromosome& c, const Bounds& bounds, RngStream& rng) {
  Chromosome child = c;
  const std::size_t k = rng.index(c.size());
  child[k] = rng.uniform01() < 0.5 ? bounds.lower(k) : bounds.upper(k);
  return child;
}

namespace {

void nonuniform_coordinate(Chromosome& child, std::size_t k, const Bounds& bounds,
                           double shrink, RngStream& rng) {
  const bool down = rng.uniform01() < 0.5;
  const double f = rng.uniform01() * shrink;
  const double target = down ? bounds.lower(k) : bounds.upper(k);
  child[k] += (target - child[k]) * f;
}

}  // namespace

Chromosome nonuniform_mutation(const Chromosome& c, const Bounds& bounds,
                               double temperature_ratio, double b, RngStream& rng) {
  Chromosome child = c;
  nonuniform_coordinate(child, rng.index(c.size()), bounds, std::pow(temperature_ratio, b), rng);
  return child;
}

Chromosome multi_nonuniform_mutation(const Chromosome& c, const Bounds& bounds,
                                     double temperature_ratio, double b, RngStream& rng) {
  Chromosome child = c;
  const double shrink = std::pow(temperature_ratio, b);
  for (std::size_t k = 0; k < c.size(); ++k) nonuniform_coordinate(child, k, bounds, shrink, rng);
  return child;
}

std::pair<Chromosome, Chromosome> simple_crossover(const Chromosome& a, const Chromosome& b,
                                                   std::size_t k) {
  Chromosome x = a;
  Chromosome y = b;
  for (std::size_t l = k - 1; l < a.size(); ++l) std::swap(x[l], y[l]);
  return {std::move(x), std::move(y)};
}

std::pair<Chromosome, Chromosome> simple_crossover(const Chromosome& a, const Chromosome& b,
                                                   RngStream& rng) {
  return simple_crossover(a, b, rng.index(a.size()) + 1);
}

std::pair<Chromosome, Chromosome> simple_arithmetic_crossover(const Chromosome& a,
                                                              const Chromosome& b, std::size_t k,
                                                              double p) {
  Chromosome x = a;
  Chromosome y = b;
  const std::size_t l = k - 1;
  x[l] = p * a[l] + (1.0 - p) * b[l];
  y[l] = p * b[l] + (1.0 - p) * a[l];
  return {std::move(x), std::move(y)};
}

std::pair<Chromosome, Chromosome> simple_arithmetic_crossover(const Chromosome& a,
                                                              const Chromosome& b,
                                                              RngStream& rng) {
  const std::size_t k = rng.index(a.size()) + 1;
  return simple_arithmetic_crossover(a, b, k, rng.uniform01());
}

std::pair<Chromosome, Chromosome> whole_arithmetic_crossover(const Chromosome& a,
                                                             const Chromosome& b, double p) {
  Chromosome x = a;
  Chromosome y = b;
  for (std::size_t l = 0; l < a.size(); ++l) {
    x[l] = p * a[l] + (1.0 - p) * b[l];
    y[l] = p * b[l] + (1.0 - p) * a[l];
  }
  return {std::move(x), std::move(y)};
}

std::pair<Chromosome, Chromosome> whole_arithmetic_crossover(const Chromosome& a,
                                                             const Chromosome& b,
                                                             RngStream& rng) {
  Chromosome x = a;
  Chromosome y = b;
  for (std::size_t l = 0; l < a.size(); ++l) {
    const double p = rng.uniform01();
    x[l] = p * a[l] + (1.0 - p) * b[l];
    y[l] = p * b[l] + (1.0 - p) * a[l];
  }
  return {std::move(x), std::move(y)};
}

Chromosome heuristic_crossover(const Chromosome& ci, const Chromosome& cj, const Chromosome& ck,
                               const Bounds& bounds, std::size_t max_tries, RngStream& rng) {
  Chromosome child(ci.size());
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    const double p = rng.uniform01();
    for (std::size_t l = 0; l < ci.size(); ++l) child[l] = ci[l] + p * (cj[l] - ck[l]);
    if (bounds.contains(child)) return child;
  }
  return ci;
}

std::vector<double> geometric_rank_probabilities(double q, std::size_t n) {
  // q' = q / (1 - (1-q)^n) normalizes the weights; dividing by their sum
  // does the same without cancellation when q is small or n is 1.
  std::vector<double> p(n);
  double w = 1.0, total = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    p[r] = w;
    total += w;
    w *= 1.0 - q;
  }
  for (double& x : p) x /= total;
  return p;
}

GeometricRanking::GeometricRanking(double q, std::size_t n)
    : prob_(geometric_rank_probabilities(q, n)), cumulative_(n) {
  std::partial_sum(prob_.begin(), prob_.end(), cumulative_.begin());
}

std::size_t GeometricRanking::draw(RngStream& rng) const {
  const double u = rng.uniform01() * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                               cumulative_.size() - 1);
}

std::size_t geometric_rank_select(const Population& population, double q, RngStream& rng) {
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return population[a].fitness < population[b].fitness;
  });
  return order[GeometricRanking(q, population.size()).draw(rng)];
}

bool metropolis_accept(double old_fitness, double new_fitness, double temperature,
                       RngStream& rng) {
  const double gain = old_fitness - new_fitness;
  if (gain >= 0.0) return true;
  return rng.uniform01() <= std::exp(gain / temperature);
}

bool identity_guard(const Chromosome& candidate, std::span<const Chromosome> members,
                    std::span<const double> precision) {
  for (const Chromosome& m : members) {
    bool same = true;
    for (std::size_t j = 0; j < candidate.size() && same; ++j) {
      same = std::abs(candidate[j] - m[j]) <= precision[j];
    }
    if (same) return true;
  }
  return false;
}

Rasa::Rasa(const RasaConfig& cfg, Evaluator& evaluator, RngStream& rng)
    : cfg_(cfg), ev_(evaluator), rng_(rng), ranking_(cfg.q, cfg.pop_size) {
  cfg_.validate();
  std::partial_sum(cfg_.operator_probability.begin(), cfg_.operator_probability.end(),
                   cumulative_.begin());
  const Problem& problem = ev_.problem();
  precision_.assign(problem.dimension(), cfg_.precision);
  if (cfg_.grid_precision && problem.encoding().is_grid()) {
    // Keys are snapped, so distinct grid points differ by a full step.
    for (std::size_t j = 0; j < precision_.size(); ++j) {
      precision_[j] = 0.5 * problem.encoding().steps[j];
    }
  }
}

Chromosome Rasa::key_of(const Chromosome& c) const {
  const Problem& problem = ev_.problem();
  if (cfg_.grid_precision && problem.encoding().is_grid()) {
    return snap_to_grid(c, problem.encoding(), problem.bounds());
  }
  return c;
}

void Rasa::sort_population() {
  std::vector<std::size_t> order(pop_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pop_[a].fitness < pop_[b].fitness; });
  Population pop;
  std::vector<Chromosome> keys;
  pop.reserve(pop_.size());
  keys.reserve(pop_.size());
  for (std::size_t i : order) {
    pop.push_back(std::move(pop_[i]));
    keys.push_back(std::move(keys_[i]));
  }
  pop_ = std::move(pop);
  keys_ = std::move(keys);
}

void Rasa::initialize() {
  const Bounds& bounds = ev_.problem().bounds();
  pop_.clear();
  keys_.clear();
  double sum = 0.0;
  while (pop_.size() < cfg_.pop_size && !ev_.solved()) {
    Chromosome c = random_point(bounds, rng_);
    Chromosome key = key_of(c);
    if (identity_guard(key, keys_, precision_)) continue;
    const double f = ev_(c);
    sum += f;
    pop_.push_back({std::move(c), f});
    keys_.push_back(std::move(key));
  }
  const double f_avg = pop_.empty() ? 0.0 : std::abs(sum / static_cast<double>(pop_.size()));
  const double scale = (f_avg > 0.0 && std::isfinite(f_avg)) ? f_avg : 1.0;
  state_ = AnnealState{};
  state_.t_max = cfg_.t_frac * scale;
  state_.t_min = cfg_.t_frac_min * scale;
  state_.temperature = state_.t_max;
  t0_ = state_.t_max;
  history_.clear();
  sort_population();
}

RasaOperator Rasa::dispatch() {
  const double u = rng_.uniform01();
  std::size_t op = 0;
  while (op + 1 < kRasaOperatorCount && u >= cumulative_[op]) ++op;
  // Skip zero-probability tail entries reached only through rounding.
  while (op > 0 && cfg_.operator_probability[op] == 0.0) --op;
  ++counts_[op];
  return static_cast<RasaOperator>(op);
}

void Rasa::offer(Chromosome child, std::size_t parent) {
  Chromosome key = key_of(child);
  if (identity_guard(key, keys_, precision_)) return;
  const double f = ev_(child);
  if (!metropolis_accept(pop_[parent].fitness, f, state_.temperature, rng_)) return;
  pop_[parent] = {std::move(child), f};
  keys_[parent] = std::move(key);
  ++state_.accepted;
  // Restore fitness order by moving the replaced member to its rank.
  std::size_t i = parent;
  while (i > 0 && pop_[i].fitness < pop_[i - 1].fitness) {
    std::swap(pop_[i], pop_[i - 1]);
    std::swap(keys_[i], keys_[i - 1]);
    --i;
  }
  while (i + 1 < pop_.size() && pop_[i + 1].fitness < pop_[i].fitness) {
    std::swap(pop_[i], pop_[i + 1]);
    std::swap(keys_[i], keys_[i + 1]);
    ++i;
  }
}

void Rasa::step() {
  const Bounds& bounds = ev_.problem().bounds();
  const RasaOperator op = dispatch();
  const std::size_t i = ranking_.draw(rng_);
  auto partner = [&](std::size_t other) {
    std::size_t j;
    do {
      j = ranking_.draw(rng_);
    } while (j == other);
    return j;
  };
  const double ratio = state_.temperature / t0_;
  const Chromosome& a = pop_[i].genes;

  // Copies are taken before any offer() reorders the population.
  switch (op) {
    case RasaOperator::uniform_mutation:
      offer(uniform_mutation(a, bounds, rng_), i);
      break;
    case RasaOperator::boundary_mutation:
      offer(boundary_mutation(a, bounds, rng_), i);
      break;
    case RasaOperator::nonuniform_mutation:
      offer(nonuniform_mutation(a, bounds, ratio, cfg_.b, rng_), i);
      break;
    case RasaOperator::multi_nonuniform_mutation:
      offer(multi_nonuniform_mutation(a, bounds, ratio, cfg_.b, rng_), i);
      break;
    case RasaOperator::simple_crossover:
    case RasaOperator::simple_arithmetic_crossover:
    case RasaOperator::whole_arithmetic_crossover: {
      const std::size_t j = partner(i);
      auto children = op == RasaOperator::simple_crossover
                          ? simple_crossover(a, pop_[j].genes, rng_)
                      : op == RasaOperator::simple_arithmetic_crossover
                          ? simple_arithmetic_crossover(a, pop_[j].genes, rng_)
                          : whole_arithmetic_crossover(a, pop_[j].genes, rng_);
      // Each child competes against its own parent; track the second
      // parent by identity since the first offer may shift ranks.
      const Chromosome second = pop_[j].genes;
      offer(std::move(children.first), i);
      const auto it = std::find_if(pop_.begin(), pop_.end(),
                                   [&](const Individual& m) { return m.genes == second; });
      if (it != pop_.end() && !ev_.solved()) {
        offer(std::move(children.second), static_cast<std::size_t>(it - pop_.begin()));
      }
      break;
    }
    case RasaOperator::heuristic_crossover: {
      const std::size_t j = ranking_.draw(rng_);
      const std::size_t k = partner(j);
      offer(heuristic_crossover(a, pop_[j].genes, pop_[k].genes, bounds, cfg_.num_heu_max, rng_),
            i);
      break;
    }
  }
  ++state_.steps;
  if (state_.accepted >= cfg_.success_max || state_.steps >= cfg_.counter_max) cool();
}

void Rasa::cool() {
  state_.temperature *= cfg_.t_mult;
  state_.accepted = 0;
  state_.steps = 0;
  ++state_.coolings;
  history_.push_back(state_.temperature);
  if (state_.temperature < state_.t_min) reanneal();
}

void Rasa::reanneal() {
  const Bounds& bounds = ev_.problem().bounds();
  sort_population();
  const std::size_t keep = (pop_.size() + 1) / 2;
  pop_.resize(keep);
  keys_.resize(keep);
  while (pop_.size() < cfg_.pop_size && !ev_.solved()) {
    Chromosome c = random_point(bounds, rng_);
    Chromosome key = key_of(c);
    if (identity_guard(key, keys_, precision_)) continue;
    const double f = ev_(c);
    pop_.push_back({std::move(c), f});
    keys_.push_back(std::move(key));
  }
  sort_population();
  state_.temperature = state_.t_max;
  state_.accepted = 0;
  state_.steps = 0;
  ++state_.reannealings;
}

void Rasa::run() {
  initialize();
  while (!ev_.solved()) step();
}

RunRecord run_rasa(const Problem& problem, const RasaConfig& cfg, std::uint64_t seed,
                   std::uint64_t max_calls) {
  cfg.validate();
  return run_search(problem, seed, max_calls, [&](Evaluator& ev, RngStream& rng) {
    Rasa(cfg, ev, rng).run();
  });
}

}  // namespace evo
