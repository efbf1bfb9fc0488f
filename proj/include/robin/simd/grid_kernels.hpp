#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Inner loops of the separable grid evaluation. Every backend computes
// out[j] = r1 * b[j] + r2 * a[j] with one rounding per operation, so the
// results are bitwise identical across backends (the library is built with
// -ffp-contract=off and no FMA).
namespace robin::simd {

enum class Backend { scalar, avx2, neon };

struct Kernels {
  Backend backend;
  void (*phi_row)(double r1, double r2, const double* b, const double* a, double* out,
                  std::size_t n);
  double (*max_abs)(const double* v, std::size_t n);
  // +1 for v > eps, -1 for v < -eps, 0 otherwise.
  void (*classify)(const double* v, double eps, std::int8_t* out, std::size_t n);
};

const Kernels& scalar_kernels();
// nullptr when not compiled in or not supported by the running CPU.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

// Best available backend, unless overridden by set_backend() or the
// ROBIN_SIMD environment variable (scalar|avx2|neon).
const Kernels& active();
// Returns false if the requested backend is unavailable.
bool set_backend(Backend b);
std::string_view backend_name(Backend b);

}  // namespace robin::simd
