#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "evo/core/problem.hpp"

namespace evo {

struct Point2 {
  double x;
  double y;
};

struct Cell {
  double width;   // H1
  double height;  // H2
};

/// Second-order intensity function on a periodic cell:
/// K(r) = A / N^2 * sum_k I_k(r), where I_k(r) counts the other points within
/// nearest-image distance r of point k and A = H1 * H2.
/// Radii must satisfy 0 < r <= min(H1, H2) / 2.
std::vector<double> ripley_k(std::span<const Point2> points, Cell cell,
                             std::span<const double> radii);

/// Square cell edge giving the requested fiber volume fraction for
/// `fibers` disks of radius `fiber_radius`.
double cell_size_for_volume_fraction(std::size_t fibers, double fiber_radius,
                                     double volume_fraction);

/// N_m radii spread uniformly over (0, H/2]: r_i = i * H / (2 N_m).
std::vector<double> default_radii(Cell cell, std::size_t count = 10);

/// Fiber arrangement that defines the target K0 curve.
struct PucReference {
  Cell cell;
  std::vector<Point2> points;
};

/// Plain-text reference file: first line "N H1 H2", then N lines "x y".
PucReference load_puc_reference(const std::filesystem::path& path);
void save_puc_reference(const PucReference& ref, const std::filesystem::path& path);

/// Shipped synthetic 10-fiber reference (same content as
/// data/puc_reference.txt).
PucReference builtin_puc_reference();

/// Periodic unit cell problem: place N particles so that their K function
/// matches K0 of the reference at the sampled radii. Genes are
/// (x^1, y^1, ..., x^N, y^N).
class PucProblem final : public Problem {
 public:
  static constexpr double kThreshold = 6e-5;

  explicit PucProblem(const PucReference& reference, std::size_t radius_count = 10,
                      double threshold = kThreshold);

  std::string name() const override { return "puc"; }
  std::size_t dimension() const override { return 2 * particles_; }
  const Bounds& bounds() const override { return bounds_; }
  const Encoding& encoding() const override { return encoding_; }
  double objective(std::span<const double> x) const override;
  bool is_success(double value) const override { return value < threshold_; }

  /// K at the sampled radii for a flattened coordinate vector.
  std::vector<double> k_function(std::span<const double> x) const;

  Cell cell() const { return cell_; }
  std::size_t particles() const { return particles_; }
  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& reference_k() const { return k0_; }

 private:
  void pair_counts(std::span<const double> x, std::span<std::uint64_t> counts) const;

  Cell cell_;
  std::size_t particles_;
  std::vector<double> radii_;
  std::vector<double> radii_sq_;
  std::vector<double> k0_;
  double threshold_;
  Bounds bounds_;
  Encoding encoding_;
};

/// F = sum_i ((K0(r_i) - K(r_i)) / (pi r_i^2))^2.
double puc_mismatch(std::span<const double> k0, std::span<const double> k,
                    std::span<const double> radii);

}  // namespace evo
