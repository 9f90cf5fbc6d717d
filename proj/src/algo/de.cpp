#include "evo/algo/de.hpp"

#include <limits>

#include "evo/algo/runner.hpp"
#include "evo/core/errors.hpp"

namespace evo {

namespace {
constexpr std::size_t kMinPopulation = 4;
}

void DeConfig::validate() const {
  if (pop_size < kMinPopulation) throw ConfigInvalid("DE: pop_size must be at least 4");
  if (!(cr >= 0.0 && cr <= 1.0)) throw ConfigInvalid("DE: CR must lie in [0, 1]");
}

std::pair<std::size_t, std::size_t> de_pick_partners(std::size_t i, std::size_t n,
                                                     RngStream& rng) {
  if (n < 3) throw PopulationTooSmall(3, n);
  std::size_t p;
  do {
    p = rng.index(n);
  } while (p == i);
  std::size_t q;
  do {
    q = rng.index(n);
  } while (q == i || q == p);
  return {p, q};
}

std::vector<bool> de_crossover_mask(std::size_t n, double cr, RngStream& rng) {
  std::vector<bool> mask(n);
  bool any = false;
  for (std::size_t j = 0; j < n; ++j) {
    mask[j] = cr >= 1.0 || rng.bernoulli(cr);
    any = any || mask[j];
  }
  if (!any && n > 0) mask[rng.index(n)] = true;
  return mask;
}

Chromosome de_combine(const Chromosome& parent, const Chromosome& p, const Chromosome& q,
                      const Chromosome& best, const std::vector<bool>& mask, double f1,
                      double f2, const Bounds& bounds) {
  Chromosome child = parent;
  for (std::size_t j = 0; j < child.size(); ++j) {
    if (mask[j]) child[j] = parent[j] + f1 * (p[j] - q[j]) + f2 * (best[j] - parent[j]);
  }
  clamp_in_place(child, bounds);
  return child;
}

Chromosome de_offspring(std::size_t i, const Population& population, std::size_t best,
                        const DeConfig& cfg, const Bounds& bounds, RngStream& rng) {
  if (population.size() < kMinPopulation) {
    throw PopulationTooSmall(kMinPopulation, population.size());
  }
  const auto [p, q] = de_pick_partners(i, population.size(), rng);
  const auto mask = de_crossover_mask(population[i].genes.size(), cfg.cr, rng);
  return de_combine(population[i].genes, population[p].genes, population[q].genes,
                    population[best].genes, mask, cfg.f1, cfg.f2, bounds);
}

DifferentialEvolution::DifferentialEvolution(const DeConfig& cfg, Evaluator& evaluator,
                                             RngStream& rng)
    : cfg_(cfg), ev_(evaluator), rng_(rng) {
  cfg_.validate();
}

void DifferentialEvolution::initialize() {
  const Bounds& bounds = ev_.problem().bounds();
  pop_.clear();
  pop_.reserve(cfg_.pop_size);
  for (std::size_t i = 0; i < cfg_.pop_size && !ev_.solved(); ++i) {
    Chromosome c = random_point(bounds, rng_);
    const double f = ev_(c);
    pop_.push_back({std::move(c), f});
  }
}

void DifferentialEvolution::set_population(Population population) {
  if (population.size() < kMinPopulation) {
    throw PopulationTooSmall(kMinPopulation, population.size());
  }
  pop_ = std::move(population);
}

void DifferentialEvolution::generation() {
  const Bounds& bounds = ev_.problem().bounds();
  const std::size_t best = best_index(pop_);
  Population offspring;
  offspring.reserve(pop_.size());
  for (std::size_t i = 0; i < pop_.size(); ++i) {
    Chromosome child = de_offspring(i, pop_, best, cfg_, bounds, rng_);
    const double f = ev_(child);
    offspring.push_back({std::move(child), f});
    if (ev_.solved()) break;
  }
  for (std::size_t i = 0; i < offspring.size(); ++i) {
    if (offspring[i].fitness < pop_[i].fitness) pop_[i] = std::move(offspring[i]);
  }
}

void DifferentialEvolution::run() {
  initialize();
  while (!ev_.solved()) generation();
}

double DifferentialEvolution::best_fitness() const {
  if (pop_.empty()) return std::numeric_limits<double>::infinity();
  return pop_[best_index(pop_)].fitness;
}

RunRecord run_de(const Problem& problem, const DeConfig& cfg, std::uint64_t seed,
                 std::uint64_t max_calls) {
  cfg.validate();
  return run_search(problem, seed, max_calls, [&](Evaluator& ev, RngStream& rng) {
    DifferentialEvolution(cfg, ev, rng).run();
  });
}

}  // namespace evo
