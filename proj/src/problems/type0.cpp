#include "evo/problems/type0.hpp"

#include <cmath>
#include <numbers>

#include "evo/core/errors.hpp"
#include "evo/kernels/kernels.hpp"

namespace evo {

double type0_value(std::span<const double> x, std::span<const double> x0, double y0, double r0) {
  if (x.size() != x0.size()) throw DimensionMismatch(x0.size(), x.size());
  const double dist = std::sqrt(kernels::squared_distance(x, x0));
  return y0 * (std::numbers::pi / 2.0 - std::atan(dist / r0));
}

Type0Problem::Type0Problem(std::vector<double> x0, double y0, double r0, double threshold)
    : x0_(std::move(x0)),
      y0_(y0),
      r0_(r0),
      threshold_(threshold),
      bounds_(Bounds::uniform(x0_.size(), -kBound, kBound)) {
  if (x0_.empty()) throw ConfigInvalid("type0: dimension must be at least 1");
  if (!(r0_ > 0.0)) throw ConfigInvalid("type0: r0 must be positive");
}

Type0Problem Type0Problem::random_instance(std::size_t dim, RngStream& rng) {
  if (dim < 1) throw ConfigInvalid("type0: dimension must be at least 1");
  std::vector<double> x0(dim);
  for (auto& v : x0) v = rng.uniform(-kBound, kBound);
  const double y0 = rng.uniform(0.0, 50.0);
  return Type0Problem(std::move(x0), y0, 1.0);
}

double Type0Problem::value(std::span<const double> x) const {
  return type0_value(x, x0_, y0_, r0_);
}

double Type0Problem::gap(std::span<const double> x) const {
  if (x.size() != x0_.size()) throw DimensionMismatch(x0_.size(), x.size());
  const double dist = std::sqrt(kernels::squared_distance(x, x0_));
  return y0_ * std::atan(dist / r0_);
}

double Type0Problem::peak() const { return y0_ * std::numbers::pi / 2.0; }

}  // namespace evo
