#include "evo/problems/beam.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "evo/core/errors.hpp"

namespace evo {

namespace {

constexpr double kPi = std::numbers::pi;

double bar_area(double diameter) { return kPi * diameter * diameter / 4.0; }

std::size_t catalog_index(double gene, std::size_t size) {
  const double r = std::round(gene);
  if (r <= 0.0) return 0;
  return std::min(static_cast<std::size_t>(r), size - 1);
}

struct Interval {
  double lo;
  double hi;
  bool empty() const { return !(hi > lo); }
  double length() const { return empty() ? 0.0 : hi - lo; }
};

/// Splits [0, L] into left / middle / right parts by the two end lengths.
std::array<Interval, 3> split_span(double span, double left, double right) {
  const double a = std::min(left, span);
  const double b = std::max(span - right, 0.0);
  return {Interval{0.0, a}, Interval{a, b}, Interval{b, span}};
}

/// Walks cost and every constraint; `visit(family, phi, phi_max, weight)`.
template <typename Visit>
std::array<double, 2> walk(const BeamSettings& s, std::span<const double> x, Visit&& visit) {
  namespace v = beam_var;
  const double b = x[v::width];
  const double h = x[v::height];
  const double dia_top = kBarDiameters[catalog_index(x[v::top_diameter], kBarDiameters.size())];
  const double dia_bot =
      kBarDiameters[catalog_index(x[v::bottom_diameter], kBarDiameters.size())];
  const double dia_st =
      kStirrupDiameters[catalog_index(x[v::stirrup_diameter], kStirrupDiameters.size())];

  const double L = s.span;
  const double q = s.load;
  const double fcd = s.fck / s.gamma_c * 1000.0;  // kN/m^2
  const double fyd = s.fyk / s.gamma_s * 1000.0;
  const double d_top = h - s.cover - dia_st - dia_top / 2.0;
  const double d_bot = h - s.cover - dia_st - dia_bot / 2.0;

  // Interior span with fixed-end moments: M(x) = q x (L - x) / 2 - q L^2 / 12.
  auto moment = [&](double t) { return q * t * (L - t) / 2.0 - q * L * L / 12.0; };
  auto shear = [&](double t) { return std::fabs(q * (L / 2.0 - t)); };

  auto section = [&](double n, double dia, double d) {
    struct {
      double capacity;
      double neutral_axis;
    } r{0.0, 0.0};
    const double as = n * bar_area(dia);
    if (as <= 0.0) return r;
    r.neutral_axis = as * fyd / (0.8 * b * fcd);
    r.capacity = std::max(0.0, as * fyd * (d - 0.4 * r.neutral_axis));
    return r;
  };

  const double clear_width = b - 2.0 * s.cover - 2.0 * dia_st;
  auto bar_fit = [&](double n, double dia) {
    if (n < 1.0) return;
    const double needed = n * dia + (n - 1.0) * std::max(dia, s.min_bar_gap);
    visit("bar_spacing", needed, clear_width, s.w_bar_spacing);
  };

  const auto bending = split_span(L, x[v::bending_left], x[v::bending_right]);
  double long_steel = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double n_top = std::round(x[v::top_count + k]);
    const double n_bot = std::round(x[v::bottom_count + k]);
    const Interval part = bending[k];
    long_steel += part.length() * (n_top * bar_area(dia_top) + n_bot * bar_area(dia_bot));
    if (part.empty()) continue;

    const double m_lo = moment(part.lo);
    const double m_hi = moment(part.hi);
    double sag = std::max(m_lo, m_hi);
    if (part.lo <= L / 2.0 && L / 2.0 <= part.hi) sag = std::max(sag, moment(L / 2.0));
    const double hog = std::max(0.0, -std::min(m_lo, m_hi));
    sag = std::max(0.0, sag);

    const auto top = section(n_top, dia_top, d_top);
    const auto bot = section(n_bot, dia_bot, d_bot);
    visit("bending", hog, top.capacity, s.w_bending);
    visit("bending", sag, bot.capacity, s.w_bending);
    if (n_top > 0.0) visit("ductility", top.neutral_axis / std::max(d_top, 0.0) ,
                           s.max_neutral_axis_ratio, s.w_ductility);
    if (n_bot > 0.0) visit("ductility", bot.neutral_axis / std::max(d_bot, 0.0),
                           s.max_neutral_axis_ratio, s.w_ductility);
    bar_fit(n_top, dia_top);
    bar_fit(n_bot, dia_bot);
  }

  const auto stirrup_parts = split_span(L, x[v::shear_left], x[v::shear_right]);
  const double d = std::max(d_bot, 0.0);
  const double z = 0.9 * d;
  const double asw = 2.0 * bar_area(dia_st);
  const double k_size = d > 0.0 ? std::min(2.0, 1.0 + std::sqrt(0.2 / d)) : 2.0;
  const double v_rdc = 0.035 * std::pow(k_size, 1.5) * std::sqrt(s.fck) * 1000.0 * b * d;
  const double nu = 0.6 * (1.0 - s.fck / 250.0);
  const double v_rd_max = b * z * nu * fcd / (s.cot_theta + 1.0 / s.cot_theta);
  const double perimeter = 2.0 * (b - 2.0 * s.cover) + 2.0 * (h - 2.0 * s.cover) + 20.0 * dia_st;
  double stirrup_steel = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const Interval part = stirrup_parts[k];
    if (part.empty()) continue;
    const double spacing = x[v::stirrup_spacing + k];
    const double stirrups = std::ceil(part.length() / spacing - 1e-9);
    stirrup_steel += stirrups * perimeter * bar_area(dia_st);

    const double demand = std::max(shear(part.lo), shear(part.hi));
    const double v_rds = asw / spacing * z * fyd * s.cot_theta;
    visit("shear", demand, std::max(v_rdc, v_rds), s.w_shear);
    visit("crushing", demand, v_rd_max, s.w_crushing);
    visit("stirrup_spacing", spacing, 0.75 * d, s.w_stirrup_spacing);
  }

  visit("deflection", d_bot > 0.0 ? L / d_bot : 1.0, d_bot > 0.0 ? s.max_span_depth_ratio : 0.0,
        s.w_deflection);
  visit("lengths", x[v::bending_left] + x[v::bending_right], L, s.w_lengths);
  visit("lengths", x[v::shear_left] + x[v::shear_right], L, s.w_lengths);

  const double concrete = b * h * L - long_steel;
  const double steel_weight = s.steel_density * (long_steel + stirrup_steel);
  return {concrete, steel_weight};
}

}  // namespace

double constraint_penalty(double phi, double phi_max, double weight, double ratio_cap) {
  if (phi <= phi_max) return 0.0;
  const double ratio = phi_max > 0.0 ? std::min(phi / phi_max, ratio_cap) : ratio_cap;
  return weight * ratio * ratio;
}

BeamProblem::BeamProblem(BeamSettings settings) : settings_(settings) {
  namespace v = beam_var;
  std::vector<double> lo(v::count), hi(v::count), step(v::count);
  auto set = [&](std::size_t j, double l, double u, double s) {
    lo[j] = l;
    hi[j] = u;
    step[j] = s;
  };
  set(v::width, 0.15, 0.45, 0.025);
  set(v::height, 0.15, 0.85, 0.025);
  set(v::top_diameter, 0.0, 15.0, 1.0);
  set(v::bottom_diameter, 0.0, 15.0, 1.0);
  for (std::size_t k = 0; k < 3; ++k) {
    set(v::top_count + k, 0.0, 15.0, 1.0);
    set(v::bottom_count + k, 0.0, 15.0, 1.0);
    set(v::stirrup_spacing + k, 0.05, 0.40, 0.025);
  }
  set(v::stirrup_diameter, 0.0, 3.0, 1.0);
  for (std::size_t j : {v::bending_left, v::bending_right, v::shear_left, v::shear_right}) {
    set(j, 0.25, 4.0, 0.025);
  }
  bounds_ = Bounds(std::move(lo), std::move(hi));
  encoding_ = Encoding::grid(std::move(step));
  if (settings_.target <= 0.0) settings_.target = default_beam_target();
}

double BeamProblem::objective(std::span<const double> x) const {
  if (x.size() != dimension()) throw DimensionMismatch(dimension(), x.size());
  double penalty = 0.0;
  const auto [concrete, steel] =
      walk(settings_, x, [&](std::string_view, double phi, double phi_max, double w) {
        penalty += constraint_penalty(phi, phi_max, w, settings_.ratio_cap);
      });
  return concrete * settings_.concrete_price + steel * settings_.steel_price + penalty;
}

BeamEvaluation BeamProblem::evaluate_design(std::span<const double> x) const {
  if (x.size() != dimension()) throw DimensionMismatch(dimension(), x.size());
  BeamEvaluation e;
  const auto [concrete, steel] =
      walk(settings_, x, [&](std::string_view family, double phi, double phi_max, double w) {
        const double p = constraint_penalty(phi, phi_max, w, settings_.ratio_cap);
        e.penalty += p;
        e.constraints.push_back({family, phi, phi_max, w, p});
      });
  e.concrete_volume = concrete;
  e.steel_weight = steel;
  e.cost = concrete * settings_.concrete_price + steel * settings_.steel_price;
  e.total = e.cost + e.penalty;
  return e;
}

double default_beam_target() {
  // Best design from tools/beam_reference (10 runs x 2M calls per algorithm),
  // plus 0.5 %.
  constexpr double kReferenceBest = 1384.501761;
  return kReferenceBest * 1.005;
}

}  // namespace evo
