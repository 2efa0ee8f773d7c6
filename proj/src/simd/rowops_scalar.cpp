#include "sqfree/simd.hpp"

namespace sqfree::simd {
namespace {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) dst[i] ^= src[i];
}

void axpy_mod_scalar(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t scale, std::uint16_t p,
                     std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    dst[i] = static_cast<std::uint16_t>((dst[i] + static_cast<std::uint32_t>(scale) * src[i]) % p);
  }
}

void face_filter_scalar(const std::uint64_t* masks, std::size_t count, const std::uint64_t* gens,
                        std::size_t gen_count, std::uint8_t* is_face) {
  for (std::size_t j = 0; j < count; ++j) {
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

const RowKernels& scalar_kernels() {
  static const RowKernels kernels{Isa::kScalar, "scalar", xor_words_scalar, axpy_mod_scalar, face_filter_scalar};
  return kernels;
}

}  // namespace sqfree::simd
