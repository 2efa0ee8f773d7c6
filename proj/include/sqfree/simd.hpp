#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Row kernels behind the exact rank computations and the face filter.
//
// Every kernel has a portable scalar reference; an AVX2 variant is compiled on
// x86-64 and picked at runtime when the CPU supports it. SQFREE_SIMD=scalar
// (or avx2) in the environment forces a choice.

namespace sqfree::simd {

enum class Isa { kScalar, kAvx2 };

struct RowKernels {
  Isa isa;
  std::string_view name;

  /// dst[i] ^= src[i]
  void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t count);

  /// dst[i] = (dst[i] + scale * src[i]) mod p. Requires p < 256 and all
  /// inputs already reduced mod p.
  void (*axpy_mod)(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t scale, std::uint16_t p,
                   std::size_t count);

  /// is_face[j] = 1 iff no generator g satisfies g ⊆ masks[j].
  void (*face_filter)(const std::uint64_t* masks, std::size_t count, const std::uint64_t* gens,
                      std::size_t gen_count, std::uint8_t* is_face);
};

const RowKernels& scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in.
const RowKernels* avx2_kernels();

bool cpu_supports_avx2();

/// Kernel table chosen once per process.
const RowKernels& active_kernels();

}  // namespace sqfree::simd
