#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace evo {

/// Fixed-length vector of decision variables. Integer-encoded problems store
/// exact integers, which doubles represent losslessly up to 2^53.
class Chromosome {
 public:
  Chromosome() = default;
  explicit Chromosome(std::size_t n, double fill = 0.0) : genes_(n, fill) {}
  explicit Chromosome(std::vector<double> genes) : genes_(std::move(genes)) {}
  Chromosome(std::initializer_list<double> genes) : genes_(genes) {}

  std::size_t size() const { return genes_.size(); }
  double& operator[](std::size_t j) { return genes_[j]; }
  double operator[](std::size_t j) const { return genes_[j]; }

  std::span<double> genes() { return genes_; }
  std::span<const double> genes() const { return genes_; }
  const std::vector<double>& vector() const { return genes_; }

  auto begin() { return genes_.begin(); }
  auto end() { return genes_.end(); }
  auto begin() const { return genes_.begin(); }
  auto end() const { return genes_.end(); }

  friend bool operator==(const Chromosome&, const Chromosome&) = default;

 private:
  std::vector<double> genes_;
};

/// Per-variable box [lower_j, upper_j] with lower_j < upper_j.
class Bounds {
 public:
  Bounds() = default;
  Bounds(std::vector<double> lower, std::vector<double> upper);
  /// Same interval for every variable.
  static Bounds uniform(std::size_t n, double lower, double upper);

  std::size_t size() const { return lower_.size(); }
  double lower(std::size_t j) const { return lower_[j]; }
  double upper(std::size_t j) const { return upper_[j]; }
  double width(std::size_t j) const { return upper_[j] - lower_[j]; }
  std::span<const double> lower() const { return lower_; }
  std::span<const double> upper() const { return upper_; }
  bool contains(const Chromosome& c) const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// Variable encoding of a problem. An empty step list means continuous;
/// otherwise gene j may only take values that are multiples of steps[j].
struct Encoding {
  std::vector<double> steps;

  bool is_grid() const { return !steps.empty(); }
  static Encoding continuous() { return {}; }
  static Encoding grid(std::vector<double> steps) { return Encoding{std::move(steps)}; }
};

/// gene_j <- min(U_j, max(L_j, gene_j)).
Chromosome clamp(Chromosome c, const Bounds& b);
void clamp_in_place(Chromosome& c, const Bounds& b);

/// gene_j <- s_j * round(gene_j / s_j), then clamped to the bounds.
Chromosome snap_to_grid(Chromosome c, const Encoding& encoding, const Bounds& b);

/// Uniform random point inside the box.
class RngStream;
Chromosome random_point(const Bounds& b, RngStream& rng);

/// A chromosome together with its objective value.
struct Individual {
  Chromosome genes;
  double fitness = 0.0;
};

using Population = std::vector<Individual>;

/// Index of the individual with the lowest fitness (first on ties).
std::size_t best_index(const Population& pop);

}  // namespace evo
