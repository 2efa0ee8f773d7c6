#include "sqfree/linalg.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "sqfree/error.hpp"

namespace sqfree {

Field Field::prime(unsigned p) {
  if (p < 2 || p > 255) throw InvalidArgument("prime field characteristic must be a prime below 256");
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InvalidArgument(std::to_string(p) + " is not prime");
  }
  Field f;
  f.characteristic_ = p;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "0") return rationals();
  char* end = nullptr;
  const unsigned long p = std::strtoul(text.c_str(), &end, 10);
  if (text.empty() || end == nullptr || *end != '\0') throw InvalidArgument("unknown field '" + text + "'");
  return prime(static_cast<unsigned>(p));
}

std::string Field::name() const {
  return characteristic_ == 0 ? std::string("Q") : "GF(" + std::to_string(characteristic_) + ")";
}

namespace {

std::size_t rank_gf2(const SparseIntMatrix& m, const simd::RowKernels& kernels) {
  const std::size_t words = (m.cols + 63) / 64;
  if (m.rows == 0 || words == 0) return 0;
  std::vector<std::uint64_t> data(m.rows * words, 0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (auto [c, v] : m.entries[r]) {
      if (v & 1) data[r * words + c / 64] ^= std::uint64_t{1} << (c % 64);
    }
  }
  auto row = [&](std::size_t r) { return data.data() + r * words; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows && !(row(pivot)[w] & bit)) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) std::swap_ranges(row(pivot) + w, row(pivot) + words, row(rank) + w);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (row(r)[w] & bit) kernels.xor_words(row(r) + w, row(rank) + w, words - w);
    }
    ++rank;
  }
  return rank;
}

std::uint16_t inverse_mod(std::uint16_t a, std::uint16_t p) {
  // p < 256, so Fermat by repeated multiplication is cheap enough.
  std::uint32_t result = 1, base = a, e = p - 2U;
  while (e) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint16_t>(result);
}

std::size_t rank_gfp(const SparseIntMatrix& m, std::uint16_t p, const simd::RowKernels& kernels) {
  if (m.rows == 0 || m.cols == 0) return 0;
  const std::size_t cols = m.cols;
  std::vector<std::uint16_t> data(m.rows * cols, 0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (auto [c, v] : m.entries[r]) {
      const int reduced = ((v % static_cast<int>(p)) + static_cast<int>(p)) % static_cast<int>(p);
      data[r * cols + c] = static_cast<std::uint16_t>((data[r * cols + c] + reduced) % p);
    }
  }
  auto row = [&](std::size_t r) { return data.data() + r * cols; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && row(pivot)[col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) std::swap_ranges(row(pivot) + col, row(pivot) + cols, row(rank) + col);
    const std::uint16_t inv = inverse_mod(row(rank)[col], p);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const std::uint16_t a = row(r)[col];
      if (a == 0) continue;
      const auto scale = static_cast<std::uint16_t>((p - (static_cast<std::uint32_t>(a) * inv) % p) % p);
      kernels.axpy_mod(row(r) + col, row(rank) + col, scale, p, cols - col);
    }
    ++rank;
  }
  return rank;
}

struct Overflow {};

struct CheckedInt64 {
  using T = std::int64_t;
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T abs(T a) {
    if (a == std::numeric_limits<T>::min()) throw Overflow{};
    return a < 0 ? -a : a;
  }
  static T gcd(T a, T b) { return std::gcd(a, b); }
};

struct BigInt {
  using T = boost::multiprecision::cpp_int;
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T abs(const T& a) { return boost::multiprecision::abs(a); }
  static T gcd(const T& a, const T& b) { return boost::multiprecision::gcd(a, b); }
};

/// Fraction-free sparse elimination. Pivot row: fewest entries; pivot column
/// within it: fewest live rows touching it, then smallest magnitude.
template <class Ops>
std::size_t rank_rational(const SparseIntMatrix& m) {
  using T = typename Ops::T;
  using Row = std::vector<std::pair<std::uint32_t, T>>;
  std::vector<Row> rows;
  rows.reserve(m.rows);
  std::vector<std::size_t> col_count(m.cols, 0);
  for (const auto& src : m.entries) {
    Row r;
    for (auto [c, v] : src) {
      if (v != 0) r.emplace_back(c, T(v));
    }
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& e : r) ++col_count[e.first];
    if (!r.empty()) rows.push_back(std::move(r));
  }

  std::size_t rank = 0;
  Row merged;
  while (!rows.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].size() < rows[best].size()) best = i;
    }
    std::swap(rows[best], rows.back());
    Row pivot_row = std::move(rows.back());
    rows.pop_back();
    for (const auto& e : pivot_row) --col_count[e.first];

    std::size_t pe = 0;
    for (std::size_t i = 1; i < pivot_row.size(); ++i) {
      const auto ci = col_count[pivot_row[i].first], cb = col_count[pivot_row[pe].first];
      if (ci < cb || (ci == cb && Ops::abs(pivot_row[i].second) < Ops::abs(pivot_row[pe].second))) pe = i;
    }
    const std::uint32_t pcol = pivot_row[pe].first;
    const T pval = pivot_row[pe].second;
    ++rank;
    if (col_count[pcol] == 0) continue;

    for (std::size_t i = 0; i < rows.size();) {
      Row& r = rows[i];
      auto it = std::lower_bound(r.begin(), r.end(), pcol, [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (it == r.end() || it->first != pcol) {
        ++i;
        continue;
      }
      const T rval = it->second;
      for (const auto& e : r) --col_count[e.first];
      // r <- pval * r - rval * pivot_row, merged by column.
      merged.clear();
      auto a = r.begin();
      auto b = pivot_row.begin();
      while (a != r.end() || b != pivot_row.end()) {
        if (b == pivot_row.end() || (a != r.end() && a->first < b->first)) {
          merged.emplace_back(a->first, Ops::mul(pval, a->second));
          ++a;
        } else if (a == r.end() || b->first < a->first) {
          merged.emplace_back(b->first, Ops::sub(T(0), Ops::mul(rval, b->second)));
          ++b;
        } else {
          T v = Ops::sub(Ops::mul(pval, a->second), Ops::mul(rval, b->second));
          if (v != 0) merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      T g = 0;
      for (const auto& e : merged) g = Ops::gcd(g, Ops::abs(e.second));
      if (g > 1) {
        for (auto& e : merged) e.second /= g;
      }
      r.swap(merged);
      for (const auto& e : r) ++col_count[e.first];
      if (r.empty()) {
        std::swap(rows[i], rows.back());
        rows.pop_back();
      } else {
        ++i;
      }
    }
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(const SparseIntMatrix& matrix, Field field, const simd::RowKernels& kernels) {
  if (matrix.entries.size() != matrix.rows) throw InvalidArgument("row count does not match entries");
  switch (field.characteristic()) {
    case 0:
      try {
        return rank_rational<CheckedInt64>(matrix);
      } catch (const Overflow&) {
        return rank_rational<BigInt>(matrix);
      }
    case 2:
      return rank_gf2(matrix, kernels);
    default:
      return rank_gfp(matrix, static_cast<std::uint16_t>(field.characteristic()), kernels);
  }
}

}  // namespace sqfree
