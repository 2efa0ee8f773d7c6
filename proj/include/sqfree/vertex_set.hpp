#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace sqfree {

/// Set of vertex indices into a label table, stored as a 64-bit word.
///
/// Every face, monomial support and vertex cover in the library is one of
/// these. Indices are in [0, 64).
class VertexSet {
 public:
  static constexpr unsigned kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = unsigned;
    using difference_type = std::ptrdiff_t;
    using pointer = const unsigned*;
    using reference = unsigned;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr unsigned operator*() const { return static_cast<unsigned>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<unsigned> members) {
    for (unsigned v : members) insert(v);
  }

  static constexpr VertexSet range(unsigned n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr VertexSet singleton(unsigned v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(unsigned v) const { return (bits_ >> v) & 1U; }
  constexpr unsigned min() const { return static_cast<unsigned>(std::countr_zero(bits_)); }
  constexpr unsigned max() const { return 63U - static_cast<unsigned>(std::countl_zero(bits_)); }

  constexpr void insert(unsigned v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(unsigned v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool superset_of(VertexSet other) const { return other.subset_of(*this); }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<unsigned> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order: by size, then lexicographic on the ascending member list.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return canonical_less(a, b); }
};

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    std::uint64_t x = s.bits() * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(x ^ (x >> 32));
  }
};

/// Sorts canonically and removes duplicates.
void canonicalize(std::vector<VertexSet>& sets);

/// Keeps only the inclusion-minimal sets, canonically sorted.
std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets);

/// Keeps only the inclusion-maximal sets, canonically sorted.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets);

}  // namespace sqfree
