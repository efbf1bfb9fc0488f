#include <immintrin.h>

#include "robin/simd/grid_kernels.hpp"

namespace robin::simd {

namespace {

void phi_row(double r1, double r2, const double* b, const double* a, double* out,
             std::size_t n) {
  const __m256d v1 = _mm256_set1_pd(r1), v2 = _mm256_set1_pd(r2);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d x = _mm256_mul_pd(v1, _mm256_loadu_pd(b + j));
    __m256d y = _mm256_mul_pd(v2, _mm256_loadu_pd(a + j));
    _mm256_storeu_pd(out + j, _mm256_add_pd(x, y));
  }
  for (; j < n; ++j) out[j] = r1 * b[j] + r2 * a[j];
}

double max_abs(const double* v, std::size_t n) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d m = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) m = _mm256_max_pd(m, _mm256_and_pd(mask, _mm256_loadu_pd(v + j)));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double r = lanes[0];
  for (int k = 1; k < 4; ++k)
    if (lanes[k] > r) r = lanes[k];
  for (; j < n; ++j) {
    double x = v[j] < 0.0 ? -v[j] : v[j];
    if (x > r) r = x;
  }
  return r;
}

void classify(const double* v, double eps, std::int8_t* out, std::size_t n) {
  const __m256d pe = _mm256_set1_pd(eps), ne = _mm256_set1_pd(-eps);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d x = _mm256_loadu_pd(v + j);
    int gt = _mm256_movemask_pd(_mm256_cmp_pd(x, pe, _CMP_GT_OQ));
    int lt = _mm256_movemask_pd(_mm256_cmp_pd(x, ne, _CMP_LT_OQ));
    for (int k = 0; k < 4; ++k)
      out[j + k] = static_cast<std::int8_t>(((gt >> k) & 1) - ((lt >> k) & 1));
  }
  for (; j < n; ++j) out[j] = v[j] > eps ? 1 : (v[j] < -eps ? -1 : 0);
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels k{Backend::avx2, phi_row, max_abs, classify};
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &k : nullptr;
}

}  // namespace robin::simd
