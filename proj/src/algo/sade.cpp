#include "evo/algo/sade.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "evo/algo/runner.hpp"
#include "evo/core/errors.hpp"

namespace evo {

void SadeConfig::validate() const {
  if (pop_size < 3) throw ConfigInvalid("SADE: pop_size must be at least 3");
  if (!(radioactivity >= 0.0 && radioactivity <= 1.0)) {
    throw ConfigInvalid("SADE: radioactivity must lie in [0, 1]");
  }
  if (!(local_range >= 0.0)) throw ConfigInvalid("SADE: local_range must be non-negative");
}

Chromosome sade_differential(const Chromosome& p, const Chromosome& q, const Chromosome& r,
                             double cr, const Bounds& bounds) {
  Chromosome child = p;
  for (std::size_t j = 0; j < child.size(); ++j) child[j] += cr * (q[j] - r[j]);
  clamp_in_place(child, bounds);
  return child;
}

Chromosome sade_mutate(const Chromosome& c, double mutation_rate, const Bounds& bounds,
                       RngStream& rng) {
  const Chromosome rp = random_point(bounds, rng);
  Chromosome child = c;
  for (std::size_t j = 0; j < child.size(); ++j) child[j] += mutation_rate * (rp[j] - c[j]);
  clamp_in_place(child, bounds);
  return child;
}

Chromosome sade_local_mutate(const Chromosome& c, std::span<const double> range,
                             const Bounds& bounds, RngStream& rng) {
  Chromosome child = c;
  for (std::size_t j = 0; j < child.size(); ++j) child[j] += rng.uniform(-range[j], range[j]);
  clamp_in_place(child, bounds);
  return child;
}

Population sade_select(Population pool, std::size_t target, RngStream& rng) {
  std::vector<std::size_t> alive(pool.size());
  std::iota(alive.begin(), alive.end(), 0);
  std::vector<bool> dead(pool.size(), false);
  while (alive.size() > target) {
    std::shuffle(alive.begin(), alive.end(), rng.engine());
    const std::size_t pairs = std::min(alive.size() - target, alive.size() / 2);
    for (std::size_t k = 0; k < pairs; ++k) {
      const std::size_t a = alive[2 * k];
      const std::size_t b = alive[2 * k + 1];
      dead[pool[b].fitness < pool[a].fitness ? a : b] = true;
    }
    std::erase_if(alive, [&](std::size_t i) { return dead[i]; });
  }
  std::sort(alive.begin(), alive.end());
  Population survivors;
  survivors.reserve(alive.size());
  for (std::size_t i : alive) survivors.push_back(std::move(pool[i]));
  return survivors;
}

Sade::Sade(const SadeConfig& cfg, Evaluator& evaluator, RngStream& rng)
    : cfg_(cfg), ev_(evaluator), rng_(rng) {
  cfg_.validate();
  const Bounds& bounds = ev_.problem().bounds();
  local_range_.resize(bounds.size());
  for (std::size_t j = 0; j < bounds.size(); ++j) local_range_[j] = cfg_.local_range * bounds.width(j);
}

void Sade::initialize() {
  const Bounds& bounds = ev_.problem().bounds();
  pop_.clear();
  pop_.reserve(2 * cfg_.pop_size);
  for (std::size_t i = 0; i < cfg_.pop_size && !ev_.solved(); ++i) {
    Chromosome c = random_point(bounds, rng_);
    const double f = ev_(c);
    pop_.push_back({std::move(c), f});
  }
}

void Sade::set_population(Population population) {
  if (population.size() < 3) throw PopulationTooSmall(3, population.size());
  pop_ = std::move(population);
}

void Sade::generation() {
  const Bounds& bounds = ev_.problem().bounds();
  const std::size_t n = pop_.size();
  std::vector<Chromosome> fresh;
  fresh.reserve(n);
  for (std::size_t i = 0; i < n && fresh.size() < n; ++i) {
    if (rng_.bernoulli(cfg_.radioactivity)) {
      fresh.push_back(sade_mutate(pop_[i].genes, cfg_.mutation_rate, bounds, rng_));
    }
    if (fresh.size() < n && rng_.bernoulli(cfg_.radioactivity)) {
      fresh.push_back(sade_local_mutate(pop_[i].genes, local_range_, bounds, rng_));
    }
  }
  last_differential_ = n - fresh.size();
  auto member = [&](std::size_t k) -> const Chromosome& {
    return k < n ? pop_[k].genes : fresh[k - n];
  };
  while (fresh.size() < n) {
    const std::size_t m = n + fresh.size();
    const std::size_t p = rng_.index(m);
    std::size_t q;
    do {
      q = rng_.index(m);
    } while (q == p);
    std::size_t r;
    do {
      r = rng_.index(m);
    } while (r == p || r == q);
    Chromosome child = sade_differential(member(p), member(q), member(r), cfg_.cr, bounds);
    fresh.push_back(std::move(child));
  }
  for (auto& c : fresh) {
    const double f = ev_(c);
    pop_.push_back({std::move(c), f});
    if (ev_.solved()) return;
  }
  last_doubled_ = pop_.size();
  pop_ = sade_select(std::move(pop_), n, rng_);
}

void Sade::run() {
  initialize();
  while (!ev_.solved()) generation();
}

double Sade::best_fitness() const {
  if (pop_.empty()) return std::numeric_limits<double>::infinity();
  return pop_[best_index(pop_)].fitness;
}

RunRecord run_sade(const Problem& problem, const SadeConfig& cfg, std::uint64_t seed,
                   std::uint64_t max_calls) {
  cfg.validate();
  return run_search(problem, seed, max_calls, [&](Evaluator& ev, RngStream& rng) {
    Sade(cfg, ev, rng).run();
  });
}

}  // namespace evo
