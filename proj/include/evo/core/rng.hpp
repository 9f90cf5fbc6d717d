#pragma once

#include <cstdint>
#include <random>

namespace evo {

/// SplitMix64 finalizer. A bijection on 64-bit words, used to derive
/// independent seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic random stream. Every stochastic operation in the library
/// draws from an explicitly passed stream; there is no global generator.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// u(a, b): real uniform on [a, b].
  double uniform(double a, double b) {
    if (a == b) return a;
    return std::uniform_real_distribution<double>(a, b)(engine_);
  }
  double uniform01() { return uniform(0.0, 1.0); }

  /// u[a, b]: integer uniform, inclusive on both ends.
  std::int64_t uniform_int(std::int64_t a, std::int64_t b) {
    return std::uniform_int_distribution<std::int64_t>(a, b)(engine_);
  }
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
  }

  double normal(double mean = 0.0, double stddev = 1.0) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace evo
