#include "trialg/simd/modp_kernels.hpp"

#include <immintrin.h>

namespace trialg::simd::detail {

namespace {

// r = x mod p for 0 <= x < 2^53, x an exact integer.
inline __m256d reduce(__m256d x, __m256d p, __m256d pinv) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, pinv));
  __m256d r = _mm256_fnmadd_pd(q, p, x);
  // q may be off by one in either direction.
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return r;
}

} // namespace

void axpy_avx2(double *dst, const double *src, double factor, std::size_t n) {
  const __m256d p = _mm256_set1_pd(static_cast<double>(kPrime));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(kPrime));
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d s = _mm256_loadu_pd(src + i);
    const __m256d d = _mm256_loadu_pd(dst + i);
    _mm256_storeu_pd(dst + i, reduce(_mm256_fmadd_pd(f, s, d), p, pinv));
  }
  if (i < n) axpy_scalar(dst + i, src + i, factor, n - i);
}

void scale_avx2(double *v, double factor, std::size_t n) {
  const __m256d p = _mm256_set1_pd(static_cast<double>(kPrime));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(kPrime));
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(v + i);
    _mm256_storeu_pd(v + i, reduce(_mm256_mul_pd(f, x), p, pinv));
  }
  if (i < n) scale_scalar(v + i, factor, n - i);
}

} // namespace trialg::simd::detail
