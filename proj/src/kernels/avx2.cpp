// Compiled with -mavx2 -mfma; only reached after a CPUID check.

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "toric/kernels.hpp"

namespace toric::kernels::avx2 {

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

// Lanes are widened to double: for p <= 2^26 the value dst + factor * src stays
// below 2^53, so the fused multiply-add, quotient estimate and remainder are exact.
// The quotient estimate is off by at most one; a single correction fixes it.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  const std::size_t n = dst.size();
  if (p > kAvx2MaxModulus) {
    scalar::axpy_mod(dst, src, factor, p);
    return;
  }
  const __m256d vf = _mm256_set1_pd(static_cast<double>(factor));
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i d32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst.data() + i));
    __m128i s32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src.data() + i));
    __m256d d = _mm256_cvtepi32_pd(d32);
    __m256d s = _mm256_cvtepi32_pd(s32);
    __m256d t = _mm256_fmadd_pd(vf, s, d);
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
    __m256d r = _mm256_fnmadd_pd(q, vp, t);
    // r in (-p, 2p): fold both ends back into [0, p).
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst.data() + i), _mm256_cvttpd_epi32(r));
  }
  if (i < n) scalar::axpy_mod(dst.subspan(i), src.subspan(i), factor, p);
}

bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    // testc(vb, va) is 1 iff (~vb & va) == 0
    if (!_mm256_testc_si256(vb, va)) return false;
  }
  for (; i < n; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

}  // namespace toric::kernels::avx2
