#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sqfree/simd.hpp"

namespace sqfree {

/// Coefficient field: characteristic 0 means the rationals, otherwise a prime below 256.
class Field {
 public:
  constexpr Field() = default;
  static Field rationals() { return Field(); }
  /// Throws InvalidArgument unless p is a prime below 256.
  static Field prime(unsigned p);
  /// Accepts "q", "Q", "0" or a prime.
  static Field parse(const std::string& text);

  constexpr unsigned characteristic() const { return characteristic_; }
  std::string name() const;
  constexpr bool operator==(const Field&) const = default;

 private:
  unsigned characteristic_ = 0;
};

/// Integer matrix with entries in {-1, 0, 1} mostly, stored by rows of (column, value).
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int32_t>>> entries;
};

/// Exact rank over `field`. Rationals use fraction-free elimination on 64-bit
/// integers and switch to arbitrary precision on overflow; prime fields use
/// dense elimination through the row kernels.
std::size_t matrix_rank(const SparseIntMatrix& matrix, Field field,
                        const simd::RowKernels& kernels = simd::active_kernels());

}  // namespace sqfree
