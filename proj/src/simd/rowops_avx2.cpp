// Compiled with -mavx2; only reached after a runtime CPU check.
#include "sqfree/simd.hpp"

#include <immintrin.h>

namespace sqfree::simd {
namespace {

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t count) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < count; ++i) dst[i] ^= src[i];
}

// 16 lanes of u16. scale*src < p^2 <= 65025 and dst + scale*src < 2^16, so
// the low 16 bits of each product are exact; reduction is Barrett with
// m = floor(2^16 / p), which undershoots the quotient by at most one.
void axpy_mod_avx2(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t scale, std::uint16_t p,
                   std::size_t count) {
  const __m256i vscale = _mm256_set1_epi16(static_cast<short>(scale));
  const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
  const __m256i vm = _mm256_set1_epi16(static_cast<short>(static_cast<std::uint16_t>(65536U / p)));
  std::size_t i = 0;
  for (; i + 16 <= count; i += 16) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i x = _mm256_add_epi16(a, _mm256_mullo_epi16(b, vscale));
    const __m256i q = _mm256_mulhi_epu16(x, vm);
    __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(q, vp));
    r = _mm256_min_epu16(r, _mm256_sub_epi16(r, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  for (; i < count; ++i) {
    dst[i] = static_cast<std::uint16_t>((dst[i] + static_cast<std::uint32_t>(scale) * src[i]) % p);
  }
}

void face_filter_avx2(const std::uint64_t* masks, std::size_t count, const std::uint64_t* gens,
                      std::size_t gen_count, std::uint8_t* is_face) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + j));
    __m256i hit = zero;
    for (std::size_t g = 0; g < gen_count; ++g) {
      const __m256i outside = _mm256_andnot_si256(m, _mm256_set1_epi64x(static_cast<long long>(gens[g])));
      hit = _mm256_or_si256(hit, _mm256_cmpeq_epi64(outside, zero));
      if ((g & 7U) == 7U && _mm256_movemask_pd(_mm256_castsi256_pd(hit)) == 0xF) break;
    }
    const int bits = _mm256_movemask_pd(_mm256_castsi256_pd(hit));
    for (int lane = 0; lane < 4; ++lane) is_face[j + lane] = ((bits >> lane) & 1) ? 0 : 1;
  }
  for (; j < count; ++j) {
    std::uint8_t face = 1;
    for (std::size_t g = 0; g < gen_count; ++g) {
      if ((gens[g] & ~masks[j]) == 0) {
        face = 0;
        break;
      }
    }
    is_face[j] = face;
  }
}

}  // namespace

const RowKernels* avx2_kernels() {
  static const RowKernels kernels{Isa::kAvx2, "avx2", xor_words_avx2, axpy_mod_avx2, face_filter_avx2};
  return &kernels;
}

}  // namespace sqfree::simd
