#include "wreath/simd/kernels.hpp"

#include <atomic>

#include "wreath/errors.hpp"

namespace wreath::simd {

Block identity_block() {
  Block b;
  for (int i = 0; i < kBlockWidth; ++i) b.v[i] = static_cast<std::uint8_t>(i);
  return b;
}

std::string_view to_string(Backend backend) {
  switch (backend) {
  case Backend::Scalar: return "scalar";
  case Backend::Ssse3: return "ssse3";
  case Backend::Avx2: return "avx2";
  case Backend::Neon: return "neon";
  }
  return "unknown";
}

namespace {

bool supported(Backend backend) {
  switch (backend) {
  case Backend::Scalar: return true;
#if defined(WREATH_HAVE_X86_KERNELS)
  case Backend::Ssse3: return __builtin_cpu_supports("ssse3");
  case Backend::Avx2: return __builtin_cpu_supports("avx2");
#endif
#if defined(WREATH_HAVE_NEON_KERNELS)
  case Backend::Neon: return true;
#endif
  default: return false;
  }
}

const Kernels* detect() {
  if (supported(Backend::Avx2)) return &kernels_for(Backend::Avx2);
  if (supported(Backend::Ssse3)) return &kernels_for(Backend::Ssse3);
  if (supported(Backend::Neon)) return &kernels_for(Backend::Neon);
  return &detail::scalar_kernels();
}

std::atomic<const Kernels*>& current() {
  static std::atomic<const Kernels*> k{detect()};
  return k;
}

} // namespace

const Kernels& active() { return *current().load(std::memory_order_relaxed); }

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::Scalar, Backend::Ssse3, Backend::Avx2, Backend::Neon})
    if (supported(b)) out.push_back(b);
  return out;
}

const Kernels& kernels_for(Backend backend) {
  if (!supported(backend))
    throw Error(ErrorKind::InvalidParameter,
                "backend " + std::string(to_string(backend)) + " is not available on this CPU");
  switch (backend) {
#if defined(WREATH_HAVE_X86_KERNELS)
  case Backend::Ssse3: return detail::ssse3_kernels();
  case Backend::Avx2: return detail::avx2_kernels();
#endif
#if defined(WREATH_HAVE_NEON_KERNELS)
  case Backend::Neon: return detail::neon_kernels();
#endif
  default: return detail::scalar_kernels();
  }
}

void force_backend(Backend backend) {
  current().store(&kernels_for(backend), std::memory_order_relaxed);
}

void reset_backend() { current().store(detect(), std::memory_order_relaxed); }

} // namespace wreath::simd
