#include "evo/algo/iasa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "evo/algo/runner.hpp"
#include "evo/core/errors.hpp"

namespace evo {

namespace {

constexpr double kSnapTolerance = 1e-9;

// Quotient x / p, pulled onto the nearest integer when it is within a
// relative tolerance of it.
double snapped_quotient(double x, double p) {
  const double q = x / p;
  const double r = std::nearbyint(q);
  return std::abs(q - r) <= kSnapTolerance * std::max(1.0, std::abs(q)) ? r : q;
}

}  // namespace

IntegerCodec::IntegerCodec(std::vector<double> precision, const Bounds& bounds)
    : precision_(std::move(precision)) {
  if (precision_.size() != bounds.size()) {
    throw DimensionMismatch(bounds.size(), precision_.size());
  }
  lower_.resize(size());
  upper_.resize(size());
  for (std::size_t j = 0; j < size(); ++j) {
    if (!(precision_[j] > 0.0)) throw ConfigInvalid("IASA: precision must be positive");
    lower_[j] = std::ceil(snapped_quotient(bounds.lower(j), precision_[j]));
    upper_[j] = std::floor(snapped_quotient(bounds.upper(j), precision_[j]));
    if (lower_[j] > upper_[j]) throw ConfigInvalid("IASA: precision coarser than the variable range");
  }
}

IntegerCodec IntegerCodec::uniform(double precision, const Bounds& bounds) {
  return IntegerCodec(std::vector<double>(bounds.size(), precision), bounds);
}

double IntegerCodec::encode(double x, std::size_t j) const {
  return std::clamp(std::trunc(snapped_quotient(x, precision_[j])), lower_[j], upper_[j]);
}

Chromosome IntegerCodec::encode(const Chromosome& x) const {
  if (x.size() != size()) throw DimensionMismatch(size(), x.size());
  Chromosome y(size());
  for (std::size_t j = 0; j < size(); ++j) y[j] = encode(x[j], j);
  return y;
}

Chromosome IntegerCodec::decode(const Chromosome& y) const {
  if (y.size() != size()) throw DimensionMismatch(size(), y.size());
  Chromosome x(size());
  for (std::size_t j = 0; j < size(); ++j) x[j] = y[j] * precision_[j];
  return x;
}

void IntegerCodec::clamp(Chromosome& y) const {
  for (std::size_t j = 0; j < size(); ++j) y[j] = std::clamp(y[j], lower_[j], upper_[j]);
}

void IasaConfig::validate() const {
  if (old_size < 3) throw ConfigInvalid("IASA: OldSize must be at least 3");
  if (new_size < 1) throw ConfigInvalid("IASA: NewSize must be positive");
  if (!(t_min > 0.0 && t_min < t_max)) throw ConfigInvalid("IASA: need 0 < T_min < T_max");
  if (!(tmin_at_calls_rate > 0.0 && tmin_at_calls_rate <= 1.0)) {
    throw ConfigInvalid("IASA: TminAtCallsRate must lie in (0, 1]");
  }
  if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
    throw ConfigInvalid("IASA: CrossoverProb must lie in [0, 1]");
  }
  if (!(cr >= 0.0)) throw ConfigInvalid("IASA: CR must be non-negative");
  if (success_max == 0 || counter_max == 0) {
    throw ConfigInvalid("IASA: SuccessMax and CounterMax must be positive");
  }
  if (!(precision > 0.0)) throw ConfigInvalid("IASA: precision must be positive");
}

Chromosome iasa_differential_crossover(const Chromosome& p, const Chromosome& q,
                                       const Chromosome& r, double u, const IntegerCodec& codec) {
  Chromosome child(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) child[j] = std::nearbyint(p[j] + u * (q[j] - r[j]));
  codec.clamp(child);
  return child;
}

Chromosome iasa_differential_crossover(const Chromosome& p, const Chromosome& q,
                                       const Chromosome& r, double cr, const IntegerCodec& codec,
                                       RngStream& rng) {
  return iasa_differential_crossover(p, q, r, rng.uniform(0.0, cr), codec);
}

Chromosome iasa_mutate(const Chromosome& c, const Chromosome& partner, const IntegerCodec& codec,
                       RngStream& rng) {
  Chromosome child = c;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double sigma = std::abs(c[j] - partner[j]) / 2.0 + 1.0;
    child[j] += std::nearbyint(rng.normal(0.0, sigma));
  }
  codec.clamp(child);
  return child;
}

double iasa_accept_probability(double old_fitness, double new_fitness, double temperature) {
  return 1.0 / (1.0 + std::exp((new_fitness - old_fitness) / temperature));
}

bool iasa_accept(double old_fitness, double new_fitness, double temperature, RngStream& rng) {
  return rng.uniform01() <= iasa_accept_probability(old_fitness, new_fitness, temperature);
}

double iasa_cool(double temperature, const IasaConfig& cfg, std::uint64_t max_calls) {
  const double exponent = static_cast<double>(cfg.counter_max) /
                          (cfg.tmin_at_calls_rate * static_cast<double>(max_calls));
  const double next = temperature * std::pow(cfg.t_min / cfg.t_max, exponent);
  return next <= cfg.t_min ? cfg.t_max : next;
}

namespace {

IntegerCodec make_codec(const IasaConfig& cfg, const Problem& problem) {
  if (cfg.grid_precision && problem.encoding().is_grid()) {
    return IntegerCodec(problem.encoding().steps, problem.bounds());
  }
  return IntegerCodec::uniform(cfg.precision, problem.bounds());
}

}  // namespace

Iasa::Iasa(const IasaConfig& cfg, Evaluator& evaluator, RngStream& rng)
    : cfg_(cfg),
      ev_(evaluator),
      rng_(rng),
      codec_(make_codec(cfg, evaluator.problem())),
      max_calls_(cfg.max_calls > 0 ? cfg.max_calls : evaluator.budget().max_calls()) {
  cfg_.validate();
  if (max_calls_ == 0) max_calls_ = 1;
}

double Iasa::evaluate(const Chromosome& y) { return ev_(codec_.decode(y)); }

void Iasa::initialize() {
  pop_.clear();
  pop_.reserve(cfg_.old_size);
  for (std::size_t i = 0; i < cfg_.old_size && !ev_.solved(); ++i) {
    Chromosome y(codec_.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
      y[j] = static_cast<double>(rng_.uniform_int(static_cast<std::int64_t>(codec_.lower(j)),
                                                  static_cast<std::int64_t>(codec_.upper(j))));
    }
    const double f = evaluate(y);
    pop_.push_back({std::move(y), f});
  }
  temperature_ = cfg_.t_max;
  stage_accepted_ = 0;
  stage_steps_ = 0;
  parent_order_.resize(pop_.size());
  std::iota(parent_order_.begin(), parent_order_.end(), 0);
  parent_cursor_ = parent_order_.size();
}

std::size_t Iasa::next_parent() {
  if (parent_cursor_ >= parent_order_.size()) {
    std::shuffle(parent_order_.begin(), parent_order_.end(), rng_.engine());
    parent_cursor_ = 0;
  }
  return parent_order_[parent_cursor_++];
}

void Iasa::wave() {
  const std::size_t n = pop_.size();
  std::vector<Chromosome> children;
  children.reserve(cfg_.new_size);
  for (std::size_t k = 0; k < cfg_.new_size; ++k) {
    if (rng_.uniform01() < cfg_.crossover_prob) {
      const std::size_t p = rng_.index(n);
      std::size_t q;
      do {
        q = rng_.index(n);
      } while (q == p);
      std::size_t r;
      do {
        r = rng_.index(n);
      } while (r == p || r == q);
      children.push_back(iasa_differential_crossover(pop_[p].genes, pop_[q].genes, pop_[r].genes,
                                                     cfg_.cr, codec_, rng_));
      ++counters_.crossovers;
    } else {
      const std::size_t i = rng_.index(n);
      std::size_t p;
      do {
        p = rng_.index(n);
      } while (p == i);
      children.push_back(iasa_mutate(pop_[i].genes, pop_[p].genes, codec_, rng_));
      ++counters_.mutations;
    }
  }

  // A fresh permutation per wave: parents are distinct within the wave
  // unless NewSize exceeds OldSize.
  parent_cursor_ = parent_order_.size();
  for (auto& child : children) {
    const double f = evaluate(child);
    ++stage_steps_;
    const std::size_t parent = next_parent();
    if (iasa_accept(pop_[parent].fitness, f, temperature_, rng_)) {
      pop_[parent] = {std::move(child), f};
      ++stage_accepted_;
      ++counters_.accepted;
    }
    if (ev_.solved()) return;
  }

  if (stage_accepted_ >= cfg_.success_max || stage_steps_ >= cfg_.counter_max) {
    const double next = iasa_cool(temperature_, cfg_, max_calls_);
    if (next == cfg_.t_max) ++counters_.reannealings;
    temperature_ = next;
    ++counters_.coolings;
    stage_accepted_ = 0;
    stage_steps_ = 0;
  }
}

void Iasa::run() {
  initialize();
  while (!ev_.solved()) wave();
}

RunRecord run_iasa(const Problem& problem, const IasaConfig& cfg, std::uint64_t seed,
                   std::uint64_t max_calls) {
  cfg.validate();
  return run_search(problem, seed, max_calls, [&](Evaluator& ev, RngStream& rng) {
    Iasa(cfg, ev, rng).run();
  });
}

}  // namespace evo
