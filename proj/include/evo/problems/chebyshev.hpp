#pragma once

#include <span>
#include <vector>

#include "evo/core/problem.hpp"

namespace evo {

/// Ascending power-basis coefficients of the Chebyshev polynomial T_n.
std::vector<double> chebyshev_coefficients(int degree);

struct ChebyshevSettings {
  int degree = 8;
  std::size_t grid_points = 1000;  // quadrature nodes per checked interval
  double coefficient_bound = 512.0;
  double threshold = 1e-5;
};

/// Polynomial fitting task: find coefficients a_0..a_n such that
/// |f(x)| <= 1 on [-1, 1] and f(x) >= T_n(x) on the flanks [-1.2, -1] and
/// [1, 1.2]. The objective is the total area by which the graph leaves this
/// region; T_n itself scores zero.
class ChebyshevProblem final : public Problem {
 public:
  explicit ChebyshevProblem(ChebyshevSettings settings = {});

  std::string name() const override { return "chebyshev"; }
  std::size_t dimension() const override { return static_cast<std::size_t>(settings_.degree) + 1; }
  const Bounds& bounds() const override { return bounds_; }
  const Encoding& encoding() const override { return encoding_; }
  double objective(std::span<const double> coeffs) const override;
  bool is_success(double value) const override { return value < settings_.threshold; }

  const ChebyshevSettings& settings() const { return settings_; }
  std::span<const double> boundary() const { return boundary_; }

 private:
  ChebyshevSettings settings_;
  Bounds bounds_;
  Encoding encoding_;
  std::vector<double> boundary_;  // T_n coefficients
};

/// Exceedance area of the polynomial with the given coefficients, for the
/// degree implied by coeffs.size() - 1. Throws NonFiniteInput on NaN/inf.
double chebyshev_objective(std::span<const double> coeffs, std::size_t grid_points = 1000);

}  // namespace evo
