#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <vector>

#include "evo/core/errors.hpp"
#include "evo/core/rng.hpp"
#include "evo/problems/beam.hpp"
#include "evo/problems/chebyshev.hpp"
#include "evo/problems/puc.hpp"
#include "evo/problems/type0.hpp"

using namespace evo;
using std::numbers::pi;

namespace {

// T_8 through its trigonometric / hyperbolic closed forms, independent of the
// power-basis coefficients used by the library.
double t8(double x) {
  if (std::abs(x) <= 1.0) return std::cos(8.0 * std::acos(x));
  return std::cosh(8.0 * std::acosh(std::abs(x)));
}

template <typename F>
double dense_trapezoid(F&& f, double lo, double hi, std::size_t n) {
  const double h = (hi - lo) / static_cast<double>(n - 1);
  double s = 0.5 * (f(lo) + f(hi));
  for (std::size_t i = 1; i + 1 < n; ++i) s += f(lo + static_cast<double>(i) * h);
  return s * h;
}

double brute_k(const std::vector<Point2>& pts, Cell cell, double r) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      double best = INFINITY;
      for (int a = -1; a <= 1; ++a) {
        for (int b = -1; b <= 1; ++b) {
          const double dx = pts[j].x + a * cell.width - pts[i].x;
          const double dy = pts[j].y + b * cell.height - pts[i].y;
          best = std::min(best, std::sqrt(dx * dx + dy * dy));
        }
      }
      total += best <= r;
    }
  }
  const double n = static_cast<double>(pts.size());
  return cell.width * cell.height / (n * n) * static_cast<double>(total);
}

std::vector<Point2> random_points(std::size_t n, Cell cell, RngStream& rng) {
  std::vector<Point2> p(n);
  for (auto& q : p) q = {rng.uniform(0.0, cell.width), rng.uniform(0.0, cell.height)};
  return p;
}

std::vector<double> flatten(const std::vector<Point2>& pts) {
  std::vector<double> x;
  for (const auto& p : pts) {
    x.push_back(p.x);
    x.push_back(p.y);
  }
  return x;
}

// Cheapest design found by the long reference runs; every constraint holds.
const std::vector<double> kBeamReference = {0.15, 0.45, 7, 4, 2, 0, 2, 1, 2, 1,
                                            0, 0.25, 0.3, 0.25, 1.275, 1.275, 0.5, 0.75};

}  // namespace

TEST_CASE("T8 power-basis coefficients") {
  const std::vector<double> expected = {1, 0, -32, 0, 160, 0, -256, 0, 128};
  CHECK(chebyshev_coefficients(8) == expected);
  CHECK(chebyshev_coefficients(0) == std::vector<double>{1});
  CHECK(chebyshev_coefficients(1) == std::vector<double>{0, 1});
}

TEST_CASE("T8 scores zero") {
  const auto t = chebyshev_coefficients(8);
  CHECK(std::abs(chebyshev_objective(t)) <= 1e-12);
  ChebyshevProblem p;
  CHECK(p.dimension() == 9);
  CHECK(std::abs(p.objective(t)) <= 1e-12);
  CHECK(p.is_success(p.objective(t)));
  CHECK(p.bounds().lower(0) == -512.0);
  CHECK(p.bounds().upper(8) == 512.0);
}

TEST_CASE("zero polynomial pays the flank deficit") {
  const std::vector<double> zero(9, 0.0);
  // Closed form: both flanks contribute the integral of T8 over [1, 1.2].
  const auto t = chebyshev_coefficients(8);
  auto antiderivative = [&](double x) {
    double s = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) s += t[k] * std::pow(x, k + 1) / (k + 1.0);
    return s;
  };
  const double exact = 2.0 * (antiderivative(1.2) - antiderivative(1.0));
  const double dense = 2.0 * dense_trapezoid(t8, 1.0, 1.2, 10000);
  CHECK(dense == doctest::Approx(exact).epsilon(1e-6));
  CHECK(chebyshev_objective(zero) == doctest::Approx(exact).epsilon(1e-5));
}

TEST_CASE("doubled T8 pays the interior exceedance") {
  auto t = chebyshev_coefficients(8);
  for (double& a : t) a *= 2.0;
  const double oracle = dense_trapezoid(
      [](double x) { return std::max(0.0, std::abs(2.0 * t8(x)) - 1.0); }, -1.0, 1.0, 200001);
  CHECK(oracle > 0.5);
  CHECK(chebyshev_objective(t) == doctest::Approx(oracle).epsilon(1e-4));
}

TEST_CASE("chebyshev rejects non-finite coefficients") {
  std::vector<double> c(9, 0.0);
  c[3] = std::nan("");
  CHECK_THROWS_AS(chebyshev_objective(c), NonFiniteInput);
  c[3] = INFINITY;
  CHECK_THROWS_AS(chebyshev_objective(c), NonFiniteInput);
}

TEST_CASE("chebyshev objective is stable under grid refinement") {
  RngStream rng(8);
  int checked = 0;
  for (int t = 0; t < 50; ++t) {
    std::vector<double> c(9);
    for (auto& a : c) a = rng.uniform(-512.0, 512.0);
    const double coarse = chebyshev_objective(c, 1000);
    const double fine = chebyshev_objective(c, 2000);
    CHECK(coarse >= 0.0);
    if (fine > 0.0) {
      CHECK(std::abs(coarse - fine) < 0.01 * fine);
      ++checked;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("type0 closed-form values") {
  const std::vector<double> x0 = {3.0, -4.0};
  const Type0Problem p(x0, 20.0, 1.0);
  CHECK(p.value(x0) == doctest::Approx(20.0 * pi / 2.0).epsilon(1e-15));
  CHECK(p.gap(x0) == 0.0);
  CHECK(p.peak() == doctest::Approx(10.0 * pi));
  const std::vector<double> unit = {4.0, -4.0};
  CHECK(p.value(unit) == doctest::Approx(20.0 * pi / 4.0).epsilon(1e-14));
  const std::vector<double> far = {3.0 + 1e12, -4.0};
  CHECK(p.value(far) > 0.0);
  CHECK(p.value(far) < 1e-10);
  CHECK(type0_value(unit, x0, 20.0, 1.0) == doctest::Approx(5.0 * pi));
}

TEST_CASE("type0 gap is non-negative and radially symmetric") {
  RngStream rng(4);
  auto inst = Type0Problem::random_instance(6, rng);
  const auto& x0 = inst.x0();
  for (int t = 0; t < 500; ++t) {
    std::vector<double> x(6);
    for (auto& v : x) v = rng.uniform(-400.0, 400.0);
    CHECK(inst.gap(x) > 0.0);
    const double r = rng.uniform(0.0, 50.0);
    std::vector<double> a = x0, b = x0;
    a[t % 6] += r;
    b[(t + 1) % 6] -= r;
    CHECK(inst.gap(a) == doctest::Approx(inst.gap(b)).epsilon(1e-12));
  }
}

TEST_CASE("type0 random instances") {
  RngStream a(31), b(31);
  const auto p = Type0Problem::random_instance(10, a);
  const auto q = Type0Problem::random_instance(10, b);
  CHECK(p.x0() == q.x0());
  CHECK(p.y0() == q.y0());
  CHECK(p.r0() == 1.0);

  RngStream rng(32);
  const auto one = Type0Problem::random_instance(1, rng);
  CHECK(one.dimension() == 1);
  CHECK(std::abs(one.x0()[0]) <= 400.0);
  CHECK_THROWS_AS(Type0Problem::random_instance(0, rng), ConfigInvalid);

  const int n = 10000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double y0 = Type0Problem::random_instance(1, rng).y0();
    CHECK(y0 >= 0.0);
    CHECK(y0 <= 50.0);
    sum += y0;
  }
  const double sigma = 50.0 / std::sqrt(12.0) / std::sqrt(static_cast<double>(n));
  CHECK(std::abs(sum / n - 25.0) < 3.0 * sigma);
}

TEST_CASE("ripley_k small configurations") {
  const Cell cell{10.0, 10.0};
  const std::vector<double> radii = {0.5, 1.0, 2.0, 3.0, 4.9};
  const std::vector<Point2> one = {{5.0, 5.0}};
  for (double k : ripley_k(one, cell, radii)) CHECK(k == 0.0);

  // Two points 2 apart across the periodic edge.
  const std::vector<Point2> two = {{0.5, 5.0}, {8.5, 5.0}};
  const auto k = ripley_k(two, cell, radii);
  CHECK(k[0] == 0.0);
  CHECK(k[1] == 0.0);
  CHECK(k[2] == 50.0);
  CHECK(k[3] == 50.0);
  CHECK(k[4] == 50.0);

  CHECK_THROWS_AS(ripley_k(two, {0.0, 1.0}, radii), DegenerateCell);
  CHECK_THROWS_AS(ripley_k(two, {10.0, -1.0}, radii), DegenerateCell);
}

TEST_CASE("ripley_k equals periodic image enumeration") {
  RngStream rng(50);
  const Cell cell{25.8, 25.8};
  const auto radii = default_radii(cell, 10);
  for (int t = 0; t < 50; ++t) {
    const auto pts = random_points(10, cell, rng);
    const auto k = ripley_k(pts, cell, radii);
    for (std::size_t i = 0; i < radii.size(); ++i) CHECK(k[i] == brute_k(pts, cell, radii[i]));
  }
}

TEST_CASE("ripley_k is monotone and translation invariant") {
  RngStream rng(51);
  const Cell cell{25.8, 25.8};
  const auto radii = default_radii(cell, 10);
  for (int t = 0; t < 100; ++t) {
    auto pts = random_points(10, cell, rng);
    const auto k = ripley_k(pts, cell, radii);
    for (std::size_t i = 1; i < k.size(); ++i) CHECK(k[i] >= k[i - 1]);
    // Shift by whole grid units of 1/8 so wrapped coordinates stay exact.
    const double sx = 0.125 * static_cast<double>(rng.uniform_int(1, 200));
    const double sy = 0.125 * static_cast<double>(rng.uniform_int(1, 200));
    for (auto& p : pts) {
      p.x = std::fmod(p.x + sx, cell.width);
      p.y = std::fmod(p.y + sy, cell.height);
    }
    const auto shifted = ripley_k(pts, cell, radii);
    for (std::size_t i = 0; i < k.size(); ++i) CHECK(shifted[i] == doctest::Approx(k[i]));
  }
}

TEST_CASE("puc objective examples") {
  const PucReference ref = builtin_puc_reference();
  const PucProblem p(ref);
  CHECK(p.dimension() == 20);
  CHECK(p.objective(flatten(ref.points)) == 0.0);

  // K = 0 reduces the sum to the reference terms alone.
  const std::vector<double> zeros(p.radii().size(), 0.0);
  double expected = 0.0;
  for (std::size_t i = 0; i < p.radii().size(); ++i) {
    const double r = p.radii()[i];
    expected += std::pow(p.reference_k()[i] / (pi * r * r), 2);
  }
  CHECK(puc_mismatch(p.reference_k(), zeros, p.radii()) == doctest::Approx(expected));

  // Two particles in a 10 x 10 cell, radii 1..5. Reference pair at distance
  // 2.5 gives K0 = (0, 0, 50, 50, 50); a pair at 1.5 gives (0, 50, 50, 50, 50).
  const PucReference toy{{10.0, 10.0}, {{1.0, 1.0}, {3.5, 1.0}}};
  const PucProblem q(toy, 5);
  CHECK(q.reference_k() == std::vector<double>{0, 0, 50, 50, 50});
  const std::vector<double> candidate = {4.0, 4.0, 4.0, 5.5};
  CHECK(q.k_function(candidate) == std::vector<double>{0, 50, 50, 50, 50});
  CHECK(q.objective(candidate) == doctest::Approx(std::pow(50.0 / (4.0 * pi), 2)));
}

TEST_CASE("puc objective vanishes only on a K match") {
  const PucProblem p(builtin_puc_reference());
  RngStream rng(52);
  for (int t = 0; t < 300; ++t) {
    std::vector<double> x(20);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = rng.uniform(0.0, 25.8);
    const double f = p.objective(x);
    CHECK(f >= 0.0);
    CHECK((f == 0.0) == (p.k_function(x) == p.reference_k()));
  }
}

TEST_CASE("shipped reference file matches the builtin one") {
  const auto path = std::filesystem::path(EVO_SOURCE_DIR) / "data" / "puc_reference.txt";
  const PucReference file = load_puc_reference(path);
  const PucReference builtin = builtin_puc_reference();
  CHECK(file.cell.width == builtin.cell.width);
  CHECK(file.cell.height == builtin.cell.height);
  REQUIRE(file.points.size() == builtin.points.size());
  for (std::size_t i = 0; i < file.points.size(); ++i) {
    CHECK(file.points[i].x == builtin.points[i].x);
    CHECK(file.points[i].y == builtin.points[i].y);
  }
}

TEST_CASE("reference files round-trip") {
  const auto path = std::filesystem::temp_directory_path() / "evo_puc_roundtrip.txt";
  RngStream rng(53);
  PucReference ref{{12.5, 12.5}, random_points(7, {12.5, 12.5}, rng)};
  save_puc_reference(ref, path);
  const PucReference back = load_puc_reference(path);
  std::filesystem::remove(path);
  REQUIRE(back.points.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(back.points[i].x == ref.points[i].x);
    CHECK(back.points[i].y == ref.points[i].y);
  }
  CHECK_THROWS_AS(load_puc_reference("/nonexistent/ref.txt"), ConfigInvalid);
}

TEST_CASE("cell size follows the volume fraction") {
  const double h = cell_size_for_volume_fraction(10, 1.0, 0.5);
  CHECK(10.0 * pi / (h * h) == doctest::Approx(0.5));
  CHECK_THROWS_AS(cell_size_for_volume_fraction(10, 1.0, 1.5), ConfigInvalid);
}

TEST_CASE("beam penalty arithmetic") {
  CHECK(constraint_penalty(0.5, 1.0, 1000.0) == 0.0);
  CHECK(constraint_penalty(1.0, 1.0, 1000.0) == 0.0);
  CHECK(constraint_penalty(2.0, 1.0, 1000.0) == 4000.0);
  CHECK(constraint_penalty(3.0, 1.5, 7.0) == 28.0);
  CHECK(constraint_penalty(1.0, 0.0, 2.0, 10.0) == 200.0);
}

TEST_CASE("beam layout") {
  const BeamProblem p;
  CHECK(p.dimension() == 18);
  CHECK(p.encoding().is_grid());
  CHECK(p.bounds().lower(beam_var::width) == 0.15);
  CHECK(p.bounds().upper(beam_var::width) == 0.45);
  CHECK(p.bounds().upper(beam_var::height) == 0.85);
  CHECK(p.bounds().upper(beam_var::top_diameter) == 15.0);
  CHECK(p.bounds().upper(beam_var::stirrup_diameter) == 3.0);
  CHECK(p.bounds().lower(beam_var::stirrup_spacing) == 0.05);
  CHECK(p.bounds().upper(beam_var::stirrup_spacing + 2) == 0.40);
  CHECK(kBarDiameters.size() == 16);
  CHECK(kStirrupDiameters.size() == 4);
}

TEST_CASE("feasible beam design costs exactly its material") {
  const BeamProblem p;
  const BeamEvaluation e = p.evaluate_design(kBeamReference);
  CHECK(e.penalty == 0.0);
  CHECK(e.total == e.cost);
  CHECK(p.objective(kBeamReference) == e.total);
  CHECK(e.total == doctest::Approx(1384.501761).epsilon(1e-9));
  CHECK(default_beam_target() == doctest::Approx(1384.501761 * 1.005));
  CHECK_FALSE(p.is_success(e.total * 1.006));
  CHECK(p.is_success(e.total));
  const auto& s = p.settings();
  CHECK(e.cost == doctest::Approx(e.concrete_volume * s.concrete_price +
                                  e.steel_weight * s.steel_price));
  for (const auto& c : e.constraints) CHECK(c.phi <= c.phi_max);
}

TEST_CASE("unreinforced minimal section") {
  const BeamProblem p;
  std::vector<double> x = kBeamReference;
  x[beam_var::width] = 0.15;
  x[beam_var::height] = 0.15;
  for (std::size_t k = 0; k < 3; ++k) {
    x[beam_var::top_count + k] = 0;
    x[beam_var::bottom_count + k] = 0;
  }
  const BeamEvaluation e = p.evaluate_design(x);
  const auto& s = p.settings();
  CHECK(e.concrete_volume * s.concrete_price == doctest::Approx(0.15 * 0.15 * 6.0 * 2000.0));
  CHECK(e.penalty > 0.0);
  CHECK(e.total == doctest::Approx(e.cost + e.penalty));
}

TEST_CASE("a single violated constraint adds w (phi / phi_max)^2") {
  const BeamProblem p;
  std::vector<double> x = kBeamReference;
  // Part lengths 4 + 4 on a 6 m span violate only the stirrup-layout length
  // check, at ratio 8 / 6.
  x[beam_var::shear_left] = 4.0;
  x[beam_var::shear_right] = 4.0;
  const BeamEvaluation e = p.evaluate_design(x);
  int violated = 0;
  for (const auto& c : e.constraints) {
    if (c.penalty > 0.0) {
      ++violated;
      CHECK(c.family == "lengths");
      CHECK(c.penalty == doctest::Approx(1000.0 * (8.0 / 6.0) * (8.0 / 6.0)));
    }
  }
  CHECK(violated == 1);
}

TEST_CASE("adding steel to a feasible beam raises its cost") {
  const BeamProblem p;
  const double base = p.objective(kBeamReference);
  int checked = 0;
  for (std::size_t j : {beam_var::top_count, beam_var::top_count + 1, beam_var::top_count + 2,
                        beam_var::bottom_count, beam_var::bottom_count + 1,
                        beam_var::bottom_count + 2}) {
    std::vector<double> x = kBeamReference;
    x[j] += 1.0;
    const BeamEvaluation e = p.evaluate_design(x);
    if (e.penalty > 0.0) continue;
    CHECK(e.total > base);
    ++checked;
  }
  CHECK(checked >= 3);
}

TEST_CASE("beam objective is finite across the box") {
  const BeamProblem p;
  RngStream rng(54);
  for (int t = 0; t < 2000; ++t) {
    Chromosome x = snap_to_grid(random_point(p.bounds(), rng), p.encoding(), p.bounds());
    const BeamEvaluation e = p.evaluate_design(x.genes());
    CHECK(std::isfinite(e.total));
    CHECK(e.cost >= 0.0);
    CHECK(e.penalty >= 0.0);
    CHECK(e.total == doctest::Approx(e.cost + e.penalty));
  }
}
