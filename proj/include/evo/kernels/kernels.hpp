#pragma once

// Data-parallel inner loops of the objectives. Each kernel has a scalar
// reference implementation and an AVX2 implementation; the dispatching entry
// points pick the widest one the running CPU supports. Setting the
// environment variable EVO_KERNELS=scalar forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace evo::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa active_isa();
/// Override the dispatch target. Throws std::invalid_argument when the CPU
/// lacks the requested instruction set.
void force_isa(Isa isa);

/// Uniform sampling grid for composite trapezoid quadrature: `points`
/// nodes from lo to hi inclusive (points >= 2).
struct Grid {
  double lo;
  double hi;
  std::size_t points;
};

/// Trapezoid integral of max(0, |p(x)| - level), p given by ascending
/// power-basis coefficients.
double integrate_excess(std::span<const double> coeffs, Grid grid, double level);

/// Trapezoid integral of max(0, p(x)).
double integrate_positive(std::span<const double> coeffs, Grid grid);

/// For every threshold r2[k], counts[k] = number of unordered pairs i < j
/// whose nearest-image squared distance on the width x height torus is
/// <= r2[k]. counts.size() must equal r2.size().
void count_periodic_pairs(std::span<const double> xs, std::span<const double> ys, double width,
                          double height, std::span<const double> r2,
                          std::span<std::uint64_t> counts);

/// Euclidean squared distance between two equal-length vectors.
double squared_distance(std::span<const double> a, std::span<const double> b);

namespace scalar {
double integrate_excess(std::span<const double> coeffs, Grid grid, double level);
double integrate_positive(std::span<const double> coeffs, Grid grid);
void count_periodic_pairs(std::span<const double> xs, std::span<const double> ys, double width,
                          double height, std::span<const double> r2,
                          std::span<std::uint64_t> counts);
double squared_distance(std::span<const double> a, std::span<const double> b);
}  // namespace scalar

#if defined(EVO_HAVE_AVX2)
namespace avx2 {
double integrate_excess(std::span<const double> coeffs, Grid grid, double level);
double integrate_positive(std::span<const double> coeffs, Grid grid);
void count_periodic_pairs(std::span<const double> xs, std::span<const double> ys, double width,
                          double height, std::span<const double> r2,
                          std::span<std::uint64_t> counts);
double squared_distance(std::span<const double> a, std::span<const double> b);
}  // namespace avx2
#endif

}  // namespace evo::kernels
