// AVX2 variants. This translation unit is compiled with -mavx2 and only
// entered after a runtime CPU check. Per-element arithmetic mirrors the
// scalar reference operation for operation (no FMA contraction), so only the
// order of the final reductions differs.

#include <immintrin.h>

#include <bit>
#include <cmath>

#include "evo/kernels/kernels.hpp"

namespace evo::kernels::avx2 {

namespace {

double horner_scalar(std::span<const double> coeffs, double x) {
  double acc = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

__m256d horner4(std::span<const double> coeffs, __m256d x) {
  __m256d acc = _mm256_set1_pd(coeffs.back());
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    acc = _mm256_add_pd(_mm256_mul_pd(acc, x), _mm256_set1_pd(coeffs[k]));
  }
  return acc;
}

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

template <typename ClipVec, typename ClipScalar>
double trapezoid(std::span<const double> coeffs, Grid grid, ClipVec&& clip_vec,
                 ClipScalar&& clip) {
  const double h = (grid.hi - grid.lo) / static_cast<double>(grid.points - 1);
  const __m256d lo = _mm256_set1_pd(grid.lo);
  const __m256d step = _mm256_set1_pd(h);
  const __m256d lane = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= grid.points; i += 4) {
    const __m256d idx = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(i)), lane);
    const __m256d x = _mm256_add_pd(lo, _mm256_mul_pd(idx, step));
    acc = _mm256_add_pd(acc, clip_vec(horner4(coeffs, x)));
  }
  double sum = hsum(acc);
  for (; i < grid.points; ++i) {
    sum += clip(horner_scalar(coeffs, grid.lo + static_cast<double>(i) * h));
  }
  const double first = clip(horner_scalar(coeffs, grid.lo));
  const double last =
      clip(horner_scalar(coeffs, grid.lo + static_cast<double>(grid.points - 1) * h));
  return h * (sum - 0.5 * (first + last));
}

}  // namespace

double integrate_excess(std::span<const double> coeffs, Grid grid, double level) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  const __m256d lvl = _mm256_set1_pd(level);
  const __m256d zero = _mm256_setzero_pd();
  return trapezoid(
      coeffs, grid,
      [&](__m256d p) { return _mm256_max_pd(_mm256_sub_pd(_mm256_andnot_pd(sign, p), lvl), zero); },
      [level](double p) { return std::fmax(0.0, std::fabs(p) - level); });
}

double integrate_positive(std::span<const double> coeffs, Grid grid) {
  const __m256d zero = _mm256_setzero_pd();
  return trapezoid(
      coeffs, grid, [&](__m256d p) { return _mm256_max_pd(p, zero); },
      [](double p) { return std::fmax(0.0, p); });
}

void count_periodic_pairs(std::span<const double> xs, std::span<const double> ys, double width,
                          double height, std::span<const double> r2,
                          std::span<std::uint64_t> counts) {
  for (auto& c : counts) c = 0;
  const std::size_t n = xs.size();
  const __m256d w = _mm256_set1_pd(width);
  const __m256d hgt = _mm256_set1_pd(height);
  constexpr int kNearest = _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC;
  for (std::size_t i = 0; i < n; ++i) {
    const __m256d xi = _mm256_set1_pd(xs[i]);
    const __m256d yi = _mm256_set1_pd(ys[i]);
    std::size_t j = i + 1;
    for (; j + 4 <= n; j += 4) {
      __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(&xs[j]), xi);
      __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(&ys[j]), yi);
      dx = _mm256_sub_pd(dx, _mm256_mul_pd(w, _mm256_round_pd(_mm256_div_pd(dx, w), kNearest)));
      dy = _mm256_sub_pd(dy,
                         _mm256_mul_pd(hgt, _mm256_round_pd(_mm256_div_pd(dy, hgt), kNearest)));
      const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
      for (std::size_t k = 0; k < r2.size(); ++k) {
        const __m256d le = _mm256_cmp_pd(d2, _mm256_set1_pd(r2[k]), _CMP_LE_OQ);
        counts[k] += static_cast<std::uint64_t>(std::popcount(
            static_cast<unsigned>(_mm256_movemask_pd(le))));
      }
    }
    for (; j < n; ++j) {
      double dx = xs[j] - xs[i];
      double dy = ys[j] - ys[i];
      dx = dx - width * std::nearbyint(dx / width);
      dy = dy - height * std::nearbyint(dy / height);
      const double d2 = dx * dx + dy * dy;
      for (std::size_t k = 0; k < r2.size(); ++k) {
        if (d2 <= r2[k]) ++counts[k];
      }
    }
  }
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= a.size(); j += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(&a[j]), _mm256_loadu_pd(&b[j]));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double sum = hsum(acc);
  for (; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    sum += d * d;
  }
  return sum;
}

}  // namespace evo::kernels::avx2
