#include "evo/core/types.hpp"

#include <algorithm>
#include <cmath>

#include "evo/core/errors.hpp"
#include "evo/core/rng.hpp"

namespace evo {

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) throw DimensionMismatch(lower_.size(), upper_.size());
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (!(lower_[j] < upper_[j])) {
      throw ConfigInvalid("bounds: lower must be below upper for variable " + std::to_string(j));
    }
  }
}

Bounds Bounds::uniform(std::size_t n, double lower, double upper) {
  return Bounds(std::vector<double>(n, lower), std::vector<double>(n, upper));
}

bool Bounds::contains(const Chromosome& c) const {
  if (c.size() != size()) return false;
  for (std::size_t j = 0; j < size(); ++j) {
    if (c[j] < lower_[j] || c[j] > upper_[j]) return false;
  }
  return true;
}

void clamp_in_place(Chromosome& c, const Bounds& b) {
  if (c.size() != b.size()) throw DimensionMismatch(b.size(), c.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = std::clamp(c[j], b.lower(j), b.upper(j));
}

Chromosome clamp(Chromosome c, const Bounds& b) {
  clamp_in_place(c, b);
  return c;
}

Chromosome snap_to_grid(Chromosome c, const Encoding& encoding, const Bounds& b) {
  if (!encoding.is_grid()) return clamp(std::move(c), b);
  if (encoding.steps.size() != c.size()) throw DimensionMismatch(encoding.steps.size(), c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double s = encoding.steps[j];
    double v = std::clamp(s * std::round(c[j] / s), b.lower(j), b.upper(j));
    // k * s and a bound such as 0.15 can differ in the last bit; use the
    // bound itself so that snapping stays idempotent.
    const double tol = 1e-9 * s;
    if (std::abs(v - b.lower(j)) <= tol) v = b.lower(j);
    if (std::abs(v - b.upper(j)) <= tol) v = b.upper(j);
    c[j] = v;
  }
  return c;
}

Chromosome random_point(const Bounds& b, RngStream& rng) {
  Chromosome c(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) c[j] = rng.uniform(b.lower(j), b.upper(j));
  return c;
}

std::size_t best_index(const Population& pop) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (pop[i].fitness < pop[best].fitness) best = i;
  }
  return best;
}

}  // namespace evo
