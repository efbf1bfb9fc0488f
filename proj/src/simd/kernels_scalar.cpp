#include "robin/simd/grid_kernels.hpp"

namespace robin::simd {

namespace {

void phi_row(double r1, double r2, const double* b, const double* a, double* out,
             std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) out[j] = r1 * b[j] + r2 * a[j];
}

double max_abs(const double* v, std::size_t n) {
  double m = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double x = v[j] < 0.0 ? -v[j] : v[j];
    if (x > m) m = x;
  }
  return m;
}

void classify(const double* v, double eps, std::int8_t* out, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) out[j] = v[j] > eps ? 1 : (v[j] < -eps ? -1 : 0);
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Backend::scalar, phi_row, max_abs, classify};
  return k;
}

}  // namespace robin::simd
