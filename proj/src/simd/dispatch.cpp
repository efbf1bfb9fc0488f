#include <atomic>
#include <cstdlib>
#include <string_view>

#include "robin/simd/grid_kernels.hpp"

namespace robin::simd {

#ifndef ROBIN_HAVE_AVX2
const Kernels* avx2_kernels() { return nullptr; }
#endif
#ifndef ROBIN_HAVE_NEON
const Kernels* neon_kernels() { return nullptr; }
#endif

namespace {

const Kernels* lookup(Backend b) {
  switch (b) {
    case Backend::scalar: return &scalar_kernels();
    case Backend::avx2: return avx2_kernels();
    case Backend::neon: return neon_kernels();
  }
  return nullptr;
}

const Kernels* pick_default() {
  if (const char* env = std::getenv("ROBIN_SIMD")) {
    std::string_view s(env);
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
      if (s == backend_name(b))
        if (const Kernels* k = lookup(b)) return k;
  }
  if (const Kernels* k = avx2_kernels()) return k;
  if (const Kernels* k = neon_kernels()) return k;
  return &scalar_kernels();
}

std::atomic<const Kernels*>& current() {
  static std::atomic<const Kernels*> k{pick_default()};
  return k;
}

}  // namespace

const Kernels& active() { return *current().load(std::memory_order_acquire); }

bool set_backend(Backend b) {
  const Kernels* k = lookup(b);
  if (!k) return false;
  current().store(k, std::memory_order_release);
  return true;
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

}  // namespace robin::simd
