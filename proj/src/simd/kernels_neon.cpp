#include <arm_neon.h>

#include "robin/simd/grid_kernels.hpp"

namespace robin::simd {

namespace {

void phi_row(double r1, double r2, const double* b, const double* a, double* out,
             std::size_t n) {
  const float64x2_t v1 = vdupq_n_f64(r1), v2 = vdupq_n_f64(r2);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    // separate mul/add, vfmaq would round once and break equivalence
    float64x2_t x = vmulq_f64(v1, vld1q_f64(b + j));
    float64x2_t y = vmulq_f64(v2, vld1q_f64(a + j));
    vst1q_f64(out + j, vaddq_f64(x, y));
  }
  for (; j < n; ++j) out[j] = r1 * b[j] + r2 * a[j];
}

double max_abs(const double* v, std::size_t n) {
  float64x2_t m = vdupq_n_f64(0.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) m = vmaxq_f64(m, vabsq_f64(vld1q_f64(v + j)));
  double r = vmaxvq_f64(m);
  for (; j < n; ++j) {
    double x = v[j] < 0.0 ? -v[j] : v[j];
    if (x > r) r = x;
  }
  return r;
}

void classify(const double* v, double eps, std::int8_t* out, std::size_t n) {
  const float64x2_t pe = vdupq_n_f64(eps), ne = vdupq_n_f64(-eps);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    float64x2_t x = vld1q_f64(v + j);
    uint64x2_t gt = vcgtq_f64(x, pe), lt = vcltq_f64(x, ne);
    out[j] = static_cast<std::int8_t>((vgetq_lane_u64(gt, 0) & 1) - (vgetq_lane_u64(lt, 0) & 1));
    out[j + 1] = static_cast<std::int8_t>((vgetq_lane_u64(gt, 1) & 1) - (vgetq_lane_u64(lt, 1) & 1));
  }
  for (; j < n; ++j) out[j] = v[j] > eps ? 1 : (v[j] < -eps ? -1 : 0);
}

}  // namespace

const Kernels* neon_kernels() {
  static const Kernels k{Backend::neon, phi_row, max_abs, classify};
  return &k;
}

}  // namespace robin::simd
