#include "trialg/simd/modp_kernels.hpp"

#include <cstdlib>
#include <string>

namespace trialg::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
  case Isa::Scalar: return "scalar";
  case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

const ModpKernels &scalar_kernels() {
  static const ModpKernels k{Isa::Scalar, &detail::axpy_scalar, &detail::scale_scalar};
  return k;
}

const ModpKernels *avx2_kernels() {
#if defined(TRIALG_HAVE_AVX2_TU)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  static const ModpKernels k{Isa::Avx2, &detail::axpy_avx2, &detail::scale_avx2};
  return supported ? &k : nullptr;
#else
  return nullptr;
#endif
}

const ModpKernels &active_kernels() {
  static const ModpKernels &chosen = [&]() -> const ModpKernels & {
    if (const char *env = std::getenv("TRIALG_SIMD"); env && std::string(env) == "scalar") {
      return scalar_kernels();
    }
    if (const auto *k = avx2_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

} // namespace trialg::simd
