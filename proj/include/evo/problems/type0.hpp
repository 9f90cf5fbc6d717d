#pragma once

#include <span>
#include <vector>

#include "evo/core/problem.hpp"
#include "evo/core/rng.hpp"

namespace evo {

/// f(x) = y0 * (pi/2 - atan(|x - x0| / r0)).
double type0_value(std::span<const double> x, std::span<const double> x0, double y0, double r0);

/// Single narrow peak of height y0*pi/2 at x0. Minimized as the gap
/// y0*pi/2 - f(x) = y0 * atan(|x - x0| / r0), which is computed directly so
/// it stays exactly zero at the peak.
class Type0Problem final : public Problem {
 public:
  static constexpr double kBound = 400.0;
  static constexpr double kThreshold = 1e-3;

  Type0Problem(std::vector<double> x0, double y0, double r0 = 1.0, double threshold = kThreshold);

  /// x0 uniform in [-400, 400]^d, y0 = u(0, 50), r0 = 1.
  static Type0Problem random_instance(std::size_t dim, RngStream& rng);

  std::string name() const override { return "type0"; }
  std::size_t dimension() const override { return x0_.size(); }
  const Bounds& bounds() const override { return bounds_; }
  const Encoding& encoding() const override { return encoding_; }
  double objective(std::span<const double> x) const override { return gap(x); }
  bool is_success(double value) const override { return value < threshold_; }

  double value(std::span<const double> x) const;
  double gap(std::span<const double> x) const;
  double peak() const;

  const std::vector<double>& x0() const { return x0_; }
  double y0() const { return y0_; }
  double r0() const { return r0_; }

 private:
  std::vector<double> x0_;
  double y0_;
  double r0_;
  double threshold_;
  Bounds bounds_;
  Encoding encoding_;
};

}  // namespace evo
