#include "trialg/simd/modp_kernels.hpp"

namespace trialg::simd {
namespace detail {

void axpy_scalar(double *dst, const double *src, double factor, std::size_t n) {
  const auto f = static_cast<std::uint64_t>(factor);
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = static_cast<std::uint64_t>(dst[i]);
    const auto s = static_cast<std::uint64_t>(src[i]);
    dst[i] = static_cast<double>((d + f * s) % kPrime);
  }
}

void scale_scalar(double *v, double factor, std::size_t n) {
  const auto f = static_cast<std::uint64_t>(factor);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<double>((f * static_cast<std::uint64_t>(v[i])) % kPrime);
  }
}

} // namespace detail

std::uint64_t inv_mod(std::uint64_t a) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % kPrime, e = kPrime - 2;
  while (e) {
    if (e & 1) result = mul_mod(result, base);
    base = mul_mod(base, base);
    e >>= 1;
  }
  return result;
}

} // namespace trialg::simd
