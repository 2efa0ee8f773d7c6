#include <doctest.h>

#include <random>

#include "sqfree/error.hpp"
#include "sqfree/linalg.hpp"

using namespace sqfree;

namespace {

SparseIntMatrix dense(const std::vector<std::vector<long long>>& rows) {
  SparseIntMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    std::vector<std::pair<std::uint32_t, std::int32_t>> entries;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] != 0) entries.emplace_back(static_cast<std::uint32_t>(c), static_cast<std::int32_t>(r[c]));
    }
    m.entries.push_back(std::move(entries));
  }
  return m;
}

std::vector<const simd::RowKernels*> variants() {
  std::vector<const simd::RowKernels*> out{&simd::scalar_kernels()};
  if (simd::avx2_kernels() != nullptr && simd::cpu_supports_avx2()) out.push_back(simd::avx2_kernels());
  return out;
}

/// Gaussian elimination mod p on a dense copy; reference for the prime-field path.
std::size_t reference_rank(std::vector<std::vector<long long>> a, long long p) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (auto& r : a) {
    for (auto& x : r) x = ((x % p) + p) % p;
  }
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    long long inv = 1;
    for (long long e = p - 2, b = a[rank][c]; e > 0; e >>= 1, b = b * b % p) {
      if (e & 1) inv = inv * b % p;
    }
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const long long f = a[r][c] * inv % p;
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("field parsing") {
  CHECK(Field::parse("q").characteristic() == 0);
  CHECK(Field::parse("Q").characteristic() == 0);
  CHECK(Field::parse("0").characteristic() == 0);
  CHECK(Field::parse("2").characteristic() == 2);
  CHECK(Field::parse("251").characteristic() == 251);
  CHECK_THROWS_AS(Field::parse("4"), InvalidArgument);
  CHECK_THROWS_AS(Field::parse("257"), InvalidArgument);
  CHECK_THROWS_AS(Field::parse("x"), InvalidArgument);
  CHECK_THROWS_AS(Field::prime(1), InvalidArgument);
  CHECK(Field::rationals().name() == "Q");
  CHECK(Field::prime(3).name() == "GF(3)");
}

TEST_CASE("small ranks") {
  CHECK(matrix_rank(dense({}), Field::rationals()) == 0);
  CHECK(matrix_rank(dense({{0, 0}, {0, 0}}), Field::rationals()) == 0);
  CHECK(matrix_rank(dense({{1, 0}, {0, 1}}), Field::rationals()) == 2);
  CHECK(matrix_rank(dense({{1, 2}, {2, 4}}), Field::rationals()) == 1);
  // Characteristic-dependent ranks.
  const auto m = dense({{1, 1}, {1, -1}});
  CHECK(matrix_rank(m, Field::rationals()) == 2);
  CHECK(matrix_rank(m, Field::prime(2)) == 1);
  CHECK(matrix_rank(m, Field::prime(3)) == 2);
  const auto three = dense({{3, 0}, {0, 1}});
  CHECK(matrix_rank(three, Field::prime(3)) == 1);
  CHECK(matrix_rank(three, Field::prime(2)) == 2);
  SparseIntMatrix broken;
  broken.rows = 2;
  CHECK_THROWS_AS(matrix_rank(broken, Field::rationals()), InvalidArgument);
}

TEST_CASE("prime-field ranks match a dense reference for every kernel") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 40, c = 1 + rng() % 70;
    std::vector<std::vector<long long>> a(r, std::vector<long long>(c));
    for (auto& row : a) {
      for (auto& x : row) x = (rng() % 4 == 0) ? static_cast<long long>(rng() % 7) - 3 : 0;
    }
    if (t % 3 == 0 && r > 2) a[r - 1] = a[0];
    for (unsigned p : {2U, 3U, 5U, 251U}) {
      const auto want = reference_rank(a, p);
      for (const auto* k : variants()) CHECK(matrix_rank(dense(a), Field::prime(p), *k) == want);
    }
  }
}

TEST_CASE("rational rank of boundary-like matrices") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 30, c = 1 + rng() % 30;
    std::vector<std::vector<long long>> a(r, std::vector<long long>(c));
    for (auto& row : a) {
      for (auto& x : row) x = (rng() % 3 == 0) ? ((rng() & 1) ? 1 : -1) : 0;
    }
    // Rank over Q is at least the rank over any GF(p) and equals it for all but finitely many p.
    const auto q = matrix_rank(dense(a), Field::rationals());
    CHECK(q >= reference_rank(a, 2));
    CHECK(q == reference_rank(a, 1'000'000'007LL));
  }
}

TEST_CASE("rational rank survives 64-bit overflow") {
  // Product of a 30x20 and a 20x30 integer matrix: rank exactly 20, with
  // fraction-free pivots far beyond 64 bits.
  std::mt19937_64 rng(63);
  const std::size_t n = 30, k = 20;
  std::vector<std::vector<long long>> b(n, std::vector<long long>(k)), c(k, std::vector<long long>(n));
  for (auto& row : b) {
    for (auto& x : row) x = static_cast<long long>(rng() % 201) - 100;
  }
  for (auto& row : c) {
    for (auto& x : row) x = static_cast<long long>(rng() % 201) - 100;
  }
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < k; ++l) a[i][j] += b[i][l] * c[l][j];
    }
  }
  REQUIRE(reference_rank(a, 1'000'000'007LL) == k);
  CHECK(matrix_rank(dense(a), Field::rationals()) == k);
}
