#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "evo/kernels/kernels.hpp"

namespace evo::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("EVO_KERNELS"); env && std::string(env) == "scalar") {
    return Isa::scalar;
  }
  return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(EVO_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("instruction set not supported: " + std::string(isa_name(isa)));
  }
  selected().store(isa, std::memory_order_relaxed);
}

#if defined(EVO_HAVE_AVX2)
#define EVO_DISPATCH(fn, ...) \
  (active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define EVO_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double integrate_excess(std::span<const double> coeffs, Grid grid, double level) {
  return EVO_DISPATCH(integrate_excess, coeffs, grid, level);
}

double integrate_positive(std::span<const double> coeffs, Grid grid) {
  return EVO_DISPATCH(integrate_positive, coeffs, grid);
}

void count_periodic_pairs(std::span<const double> xs, std::span<const double> ys, double width,
                          double height, std::span<const double> r2,
                          std::span<std::uint64_t> counts) {
  EVO_DISPATCH(count_periodic_pairs, xs, ys, width, height, r2, counts);
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  return EVO_DISPATCH(squared_distance, a, b);
}

}  // namespace evo::kernels
