#include "evo/problems/chebyshev.hpp"

#include <cmath>

#include "evo/core/errors.hpp"
#include "evo/kernels/kernels.hpp"

namespace evo {

namespace {

constexpr double kFlank = 1.2;

double exceedance(std::span<const double> coeffs, std::span<const double> boundary,
                  std::size_t grid_points) {
  for (double a : coeffs) {
    if (!std::isfinite(a)) throw NonFiniteInput("chebyshev: non-finite coefficient");
  }
  const double interior =
      kernels::integrate_excess(coeffs, {-1.0, 1.0, grid_points}, 1.0);

  // Flank deficit: area where the boundary curve lies above f.
  double deficit[32];
  std::vector<double> heap;
  std::span<double> diff;
  if (coeffs.size() <= std::size(deficit)) {
    diff = std::span<double>(deficit, coeffs.size());
  } else {
    heap.resize(coeffs.size());
    diff = heap;
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) diff[i] = boundary[i] - coeffs[i];
  const double left = kernels::integrate_positive(diff, {-kFlank, -1.0, grid_points});
  const double right = kernels::integrate_positive(diff, {1.0, kFlank, grid_points});
  return interior + left + right;
}

}  // namespace

std::vector<double> chebyshev_coefficients(int degree) {
  if (degree < 0) throw ConfigInvalid("chebyshev: negative degree");
  // T_0 = 1, T_1 = x, T_{k+1} = 2x T_k - T_{k-1}
  std::vector<double> prev{1.0};
  if (degree == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (int k = 1; k < degree; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ChebyshevProblem::ChebyshevProblem(ChebyshevSettings settings)
    : settings_(settings),
      bounds_(Bounds::uniform(static_cast<std::size_t>(settings.degree) + 1,
                              -settings.coefficient_bound, settings.coefficient_bound)),
      boundary_(chebyshev_coefficients(settings.degree)) {
  if (settings_.grid_points < 2) throw ConfigInvalid("chebyshev: need at least 2 grid points");
}

double ChebyshevProblem::objective(std::span<const double> coeffs) const {
  if (coeffs.size() != dimension()) throw DimensionMismatch(dimension(), coeffs.size());
  return exceedance(coeffs, boundary_, settings_.grid_points);
}

double chebyshev_objective(std::span<const double> coeffs, std::size_t grid_points) {
  if (coeffs.empty()) throw DimensionMismatch(1, 0);
  const auto boundary = chebyshev_coefficients(static_cast<int>(coeffs.size()) - 1);
  return exceedance(coeffs, boundary, grid_points);
}

}  // namespace evo
