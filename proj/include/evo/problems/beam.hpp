#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "evo/core/problem.hpp"

namespace evo {

/// Design vector layout of the continuous-beam problem (18 grid variables).
namespace beam_var {
inline constexpr std::size_t width = 0;          // b [m]
inline constexpr std::size_t height = 1;         // h [m]
inline constexpr std::size_t top_diameter = 2;   // catalog index
inline constexpr std::size_t bottom_diameter = 3;
inline constexpr std::size_t top_count = 4;      // 3 parts
inline constexpr std::size_t bottom_count = 7;   // 3 parts
inline constexpr std::size_t stirrup_diameter = 10;
inline constexpr std::size_t stirrup_spacing = 11;  // 3 shear parts
inline constexpr std::size_t bending_left = 14;     // end-part lengths of the bar layout
inline constexpr std::size_t bending_right = 15;
inline constexpr std::size_t shear_left = 16;       // end-part lengths of the stirrup layout
inline constexpr std::size_t shear_right = 17;
inline constexpr std::size_t count = 18;
}  // namespace beam_var

inline constexpr std::array<double, 16> kBarDiameters = {0.006, 0.008, 0.010, 0.012, 0.014, 0.016,
                                                         0.018, 0.020, 0.022, 0.025, 0.028, 0.032,
                                                         0.036, 0.040, 0.045, 0.050};
inline constexpr std::array<double, 4> kStirrupDiameters = {0.006, 0.008, 0.010, 0.012};

/// Material, load and price data of the beam model. Units: m, kN, MPa, CZK.
struct BeamSettings {
  double span = 6.0;               // interior span of a continuous beam
  double load = 30.0;              // design uniform load [kN/m]
  double concrete_price = 2000.0;  // P_c [CZK/m^3]
  double steel_price = 20.0;       // P_s [CZK/kg]
  double steel_density = 7850.0;   // [kg/m^3]
  double fck = 25.0;               // characteristic concrete strength
  double fyk = 500.0;              // characteristic steel yield strength
  double gamma_c = 1.5;
  double gamma_s = 1.15;
  double cover = 0.03;
  double min_bar_gap = 0.02;
  double max_neutral_axis_ratio = 0.45;  // x/d ductility limit
  double max_span_depth_ratio = 26.0;    // deflection proxy L/d
  double cot_theta = 2.5;                // strut inclination for stirrup design
  double ratio_cap = 10.0;               // Phi/Phi_max when the capacity vanishes
  /// w_i per constraint family.
  double w_bending = 1000.0;
  double w_ductility = 1000.0;
  double w_shear = 1000.0;
  double w_crushing = 1000.0;
  double w_stirrup_spacing = 1000.0;
  double w_bar_spacing = 1000.0;
  double w_deflection = 1000.0;
  double w_lengths = 1000.0;
  /// Success threshold on the total objective. The default is the best cost
  /// found by long reference runs plus 0.5 %.
  double target = 0.0;
};

/// One evaluated constraint Phi_i <= Phi_i,max.
struct BeamConstraint {
  std::string_view family;
  double phi;
  double phi_max;
  double weight;
  double penalty;
};

struct BeamEvaluation {
  double concrete_volume = 0.0;
  double steel_weight = 0.0;
  double cost = 0.0;
  double penalty = 0.0;
  double total = 0.0;
  std::vector<BeamConstraint> constraints;
};

/// Quadratic penalty: 0 if phi <= phi_max, else w * (phi / phi_max)^2.
/// A non-positive phi_max with positive phi yields w * ratio_cap^2.
double constraint_penalty(double phi, double phi_max, double weight, double ratio_cap = 10.0);

/// Reinforced-concrete continuous beam cost minimization. Cost is
/// V_c * P_c + W_s * P_s plus penalties for a simplified limit-state check set:
/// bending capacity and ductility per bar part (top and bottom), shear
/// capacity, strut crushing and stirrup spacing per stirrup part, bar fit in
/// the width, a span/depth deflection proxy, and part lengths fitting the span.
class BeamProblem final : public Problem {
 public:
  explicit BeamProblem(BeamSettings settings = {});

  std::string name() const override { return "beam"; }
  std::size_t dimension() const override { return beam_var::count; }
  const Bounds& bounds() const override { return bounds_; }
  const Encoding& encoding() const override { return encoding_; }
  double objective(std::span<const double> x) const override;
  bool is_success(double value) const override { return value < settings_.target; }

  /// Full breakdown; x must already be snapped to the grid.
  BeamEvaluation evaluate_design(std::span<const double> x) const;

  const BeamSettings& settings() const { return settings_; }

 private:
  BeamSettings settings_;
  Bounds bounds_;
  Encoding encoding_;
};

/// Default beam success target used by the presets.
double default_beam_target();

}  // namespace evo
