#pragma once

// Dense row kernels over the prime field GF(p), p = 2^26 - 5.
//
// Residues are stored as doubles holding exact integers in [0, p). With
// p < 2^26 every product f*s plus an addend stays below 2^53, so the vector
// variants can reduce with a floating-point quotient and an FMA remainder and
// still agree bit-for-bit with the integer reference kernels.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace trialg::simd {

inline constexpr std::uint64_t kPrime = 67108859;  // 2^26 - 5

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

struct ModpKernels {
  Isa isa;
  // dst[i] = (dst[i] + factor * src[i]) mod p
  void (*axpy)(double *dst, const double *src, double factor, std::size_t n);
  // v[i] = (factor * v[i]) mod p
  void (*scale)(double *v, double factor, std::size_t n);
};

// Reference kernels; always available.
const ModpKernels &scalar_kernels();

// AVX2+FMA kernels, or nullptr when the build or the CPU lacks them.
const ModpKernels *avx2_kernels();

// Best kernels for this CPU. TRIALG_SIMD=scalar in the environment forces
// the reference path. Resolved once per process.
const ModpKernels &active_kernels();

namespace detail {
void axpy_scalar(double *dst, const double *src, double factor, std::size_t n);
void scale_scalar(double *v, double factor, std::size_t n);
#if defined(TRIALG_HAVE_AVX2_TU)
void axpy_avx2(double *dst, const double *src, double factor, std::size_t n);
void scale_avx2(double *v, double factor, std::size_t n);
#endif
} // namespace detail

// Scalar helpers shared by the kernels and their callers.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) { return (a * b) % kPrime; }
std::uint64_t inv_mod(std::uint64_t a);

} // namespace trialg::simd
