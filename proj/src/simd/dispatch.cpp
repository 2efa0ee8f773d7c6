#include <cstdlib>
#include <string_view>

#include "sqfree/simd.hpp"

namespace sqfree::simd {

#if !defined(SQFREE_HAVE_AVX2)
const RowKernels* avx2_kernels() { return nullptr; }
#endif

bool cpu_supports_avx2() {
#if defined(SQFREE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

namespace {

const RowKernels& select_kernels() {
  const char* forced = std::getenv("SQFREE_SIMD");
  const std::string_view choice = forced ? forced : "auto";
  if (choice == "scalar") return scalar_kernels();
  if (avx2_kernels() != nullptr && cpu_supports_avx2()) return *avx2_kernels();
  return scalar_kernels();
}

}  // namespace

const RowKernels& active_kernels() {
  static const RowKernels& chosen = select_kernels();
  return chosen;
}

}  // namespace sqfree::simd
