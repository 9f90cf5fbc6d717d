#include "evo/problems/puc.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "evo/core/errors.hpp"
#include "evo/kernels/kernels.hpp"

namespace evo {

namespace {

constexpr std::size_t kMaxParticles = 256;

void check_cell(Cell cell) {
  if (!(cell.width > 0.0) || !(cell.height > 0.0)) {
    throw DegenerateCell("periodic cell must have positive width and height");
  }
}

void check_radii(Cell cell, std::span<const double> radii) {
  const double half = 0.5 * std::min(cell.width, cell.height);
  for (double r : radii) {
    if (!(r > 0.0) || r > half) {
      throw ConfigInvalid("K-function radius must lie in (0, min(H1, H2)/2]");
    }
  }
}

std::vector<double> k_from_counts(std::span<const std::uint64_t> pairs, Cell cell,
                                  std::size_t n) {
  std::vector<double> k(pairs.size(), 0.0);
  if (n == 0) return k;
  const double scale = cell.width * cell.height / (static_cast<double>(n) * static_cast<double>(n));
  // each unordered pair contributes to I_k of both its points
  for (std::size_t i = 0; i < pairs.size(); ++i) k[i] = scale * 2.0 * static_cast<double>(pairs[i]);
  return k;
}

}  // namespace

std::vector<double> ripley_k(std::span<const Point2> points, Cell cell,
                             std::span<const double> radii) {
  check_cell(cell);
  check_radii(cell, radii);
  std::vector<double> xs(points.size());
  std::vector<double> ys(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    xs[i] = points[i].x;
    ys[i] = points[i].y;
  }
  std::vector<double> r2(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) r2[i] = radii[i] * radii[i];
  std::vector<std::uint64_t> counts(radii.size());
  kernels::count_periodic_pairs(xs, ys, cell.width, cell.height, r2, counts);
  return k_from_counts(counts, cell, points.size());
}

double cell_size_for_volume_fraction(std::size_t fibers, double fiber_radius,
                                     double volume_fraction) {
  if (!(volume_fraction > 0.0 && volume_fraction < 1.0) || !(fiber_radius > 0.0)) {
    throw ConfigInvalid("volume fraction must lie in (0, 1) and fiber radius be positive");
  }
  return std::sqrt(static_cast<double>(fibers) * std::numbers::pi * fiber_radius * fiber_radius /
                   volume_fraction);
}

std::vector<double> default_radii(Cell cell, std::size_t count) {
  check_cell(cell);
  const double half = 0.5 * std::min(cell.width, cell.height);
  std::vector<double> radii(count);
  for (std::size_t i = 0; i < count; ++i) {
    radii[i] = half * static_cast<double>(i + 1) / static_cast<double>(count);
  }
  return radii;
}

PucReference load_puc_reference(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigInvalid("cannot open PUC reference file: " + path.string());
  PucReference ref{};
  std::size_t n = 0;
  std::string line;
  if (!std::getline(in, line)) throw ConfigInvalid("PUC reference: missing header line");
  {
    std::istringstream header(line);
    if (!(header >> n >> ref.cell.width >> ref.cell.height)) {
      throw ConfigInvalid("PUC reference: header must be 'N H1 H2'");
    }
  }
  check_cell(ref.cell);
  ref.points.reserve(n);
  while (ref.points.size() < n && std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    Point2 p{};
    if (!(row >> p.x >> p.y)) throw ConfigInvalid("PUC reference: malformed point line: " + line);
    if (p.x < 0.0 || p.x > ref.cell.width || p.y < 0.0 || p.y > ref.cell.height) {
      throw ConfigInvalid("PUC reference: point outside the cell: " + line);
    }
    ref.points.push_back(p);
  }
  if (ref.points.size() != n) throw ConfigInvalid("PUC reference: fewer points than declared");
  return ref;
}

void save_puc_reference(const PucReference& ref, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigInvalid("cannot write PUC reference file: " + path.string());
  out << std::setprecision(17);
  out << ref.points.size() << ' ' << ref.cell.width << ' ' << ref.cell.height << '\n';
  for (const auto& p : ref.points) out << p.x << ' ' << p.y << '\n';
}

PucReference builtin_puc_reference() {
  // Random sequential placement of 10 fibers (minimum periodic spacing 6)
  // in a 25.8 x 25.8 cell.
  return PucReference{{25.8, 25.8},
                      {{18.769, 12.907},
                       {22.717, 22.83},
                       {15.438, 0.043},
                       {6.894, 13.224},
                       {0.373, 9.044},
                       {8.421, 6.75},
                       {1.235, 16.982},
                       {21.309, 3.769},
                       {14.943, 19.07},
                       {8.281, 22.157}}};
}

PucProblem::PucProblem(const PucReference& reference, std::size_t radius_count, double threshold)
    : cell_(reference.cell),
      particles_(reference.points.size()),
      radii_(default_radii(reference.cell, radius_count)),
      threshold_(threshold) {
  if (particles_ == 0 || particles_ > kMaxParticles) {
    throw ConfigInvalid("PUC: particle count must lie in [1, 256]");
  }
  radii_sq_.reserve(radii_.size());
  for (double r : radii_) radii_sq_.push_back(r * r);
  k0_ = ripley_k(reference.points, cell_, radii_);
  std::vector<double> lower(2 * particles_, 0.0);
  std::vector<double> upper(2 * particles_);
  for (std::size_t i = 0; i < particles_; ++i) {
    upper[2 * i] = cell_.width;
    upper[2 * i + 1] = cell_.height;
  }
  bounds_ = Bounds(std::move(lower), std::move(upper));
}

void PucProblem::pair_counts(std::span<const double> x, std::span<std::uint64_t> counts) const {
  if (x.size() != dimension()) throw DimensionMismatch(dimension(), x.size());
  double xs[kMaxParticles];
  double ys[kMaxParticles];
  for (std::size_t i = 0; i < particles_; ++i) {
    xs[i] = x[2 * i];
    ys[i] = x[2 * i + 1];
  }
  kernels::count_periodic_pairs({xs, particles_}, {ys, particles_}, cell_.width, cell_.height,
                                radii_sq_, counts);
}

std::vector<double> PucProblem::k_function(std::span<const double> x) const {
  std::vector<std::uint64_t> counts(radii_.size());
  pair_counts(x, counts);
  return k_from_counts(counts, cell_, particles_);
}

double PucProblem::objective(std::span<const double> x) const {
  return puc_mismatch(k0_, k_function(x), radii_);
}

double puc_mismatch(std::span<const double> k0, std::span<const double> k,
                    std::span<const double> radii) {
  if (k0.size() != k.size() || k.size() != radii.size()) {
    throw DimensionMismatch(radii.size(), k.size());
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double term = (k0[i] - k[i]) / (std::numbers::pi * radii[i] * radii[i]);
    sum += term * term;
  }
  return sum;
}

}  // namespace evo
