#include <cmath>

#include "evo/kernels/kernels.hpp"

namespace evo::kernels::scalar {

namespace {

double horner(std::span<const double> coeffs, double x) {
  double acc = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

template <typename F>
double trapezoid(std::span<const double> coeffs, Grid grid, F&& clip) {
  const double h = (grid.hi - grid.lo) / static_cast<double>(grid.points - 1);
  double sum = 0.0;
  double first = 0.0;
  double last = 0.0;
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double x = grid.lo + static_cast<double>(i) * h;
    const double g = clip(horner(coeffs, x));
    sum += g;
    if (i == 0) first = g;
    if (i + 1 == grid.points) last = g;
  }
  return h * (sum - 0.5 * (first + last));
}

}  // namespace

double integrate_excess(std::span<const double> coeffs, Grid grid, double level) {
  return trapezoid(coeffs, grid, [level](double p) { return std::fmax(0.0, std::fabs(p) - level); });
}

double integrate_positive(std::span<const double> coeffs, Grid grid) {
  return trapezoid(coeffs, grid, [](double p) { return std::fmax(0.0, p); });
}

void count_periodic_pairs(std::span<const double> xs, std::span<const double> ys, double width,
                          double height, std::span<const double> r2,
                          std::span<std::uint64_t> counts) {
  for (auto& c : counts) c = 0;
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double dx = xs[j] - xs[i];
      double dy = ys[j] - ys[i];
      dx = dx - width * std::nearbyint(dx / width);
      dy = dy - height * std::nearbyint(dy / height);
      const double d2 = dx * dx + dy * dy;
      for (std::size_t k = 0; k < r2.size(); ++k) {
        if (d2 <= r2[k]) ++counts[k];
      }
    }
  }
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    sum += d * d;
  }
  return sum;
}

}  // namespace evo::kernels::scalar
