#include <doctest.h>

#include <random>
#include <vector>

#include "sqfree/simd.hpp"

using namespace sqfree::simd;

namespace {

std::vector<const RowKernels*> variants() {
  std::vector<const RowKernels*> out{&scalar_kernels()};
  if (avx2_kernels() != nullptr && cpu_supports_avx2()) out.push_back(avx2_kernels());
  return out;
}

}  // namespace

TEST_CASE("kernel selection") {
  CHECK(scalar_kernels().isa == Isa::kScalar);
  const auto& active = active_kernels();
  CHECK((active.isa == Isa::kScalar || active.isa == Isa::kAvx2));
  if (avx2_kernels() == nullptr) MESSAGE("AVX2 variant not compiled in; equivalence checks cover scalar only");
  else if (!cpu_supports_avx2()) MESSAGE("CPU lacks AVX2; equivalence checks cover scalar only");
}

TEST_CASE("xor kernel matches the reference") {
  std::mt19937_64 rng(51);
  for (std::size_t n : {0, 1, 3, 4, 5, 8, 17, 64, 67}) {
    std::vector<std::uint64_t> src(n), dst(n);
    for (auto& w : src) w = rng();
    for (auto& w : dst) w = rng();
    std::vector<std::uint64_t> want = dst;
    for (std::size_t i = 0; i < n; ++i) want[i] ^= src[i];
    for (const auto* k : variants()) {
      auto got = dst;
      k->xor_words(got.data(), src.data(), n);
      CHECK_MESSAGE(got == want, k->name);
    }
  }
}

TEST_CASE("modular axpy kernel matches the reference") {
  std::mt19937_64 rng(52);
  for (std::uint16_t p : {2, 3, 5, 7, 101, 251}) {
    for (std::size_t n : {0, 1, 15, 16, 17, 33, 100}) {
      std::uniform_int_distribution<unsigned> digit(0, p - 1U);
      std::vector<std::uint16_t> src(n), dst(n);
      for (auto& v : src) v = static_cast<std::uint16_t>(digit(rng));
      for (auto& v : dst) v = static_cast<std::uint16_t>(digit(rng));
      const auto scale = static_cast<std::uint16_t>(digit(rng));
      std::vector<std::uint16_t> want = dst;
      for (std::size_t i = 0; i < n; ++i) want[i] = static_cast<std::uint16_t>((want[i] + scale * src[i]) % p);
      for (const auto* k : variants()) {
        auto got = dst;
        k->axpy_mod(got.data(), src.data(), scale, p, n);
        CHECK_MESSAGE(got == want, k->name, " p=", p, " n=", n);
      }
    }
  }
}

TEST_CASE("face filter kernel matches the reference") {
  std::mt19937_64 rng(53);
  for (std::size_t n : {0, 1, 3, 4, 9, 64, 131}) {
    for (std::size_t g : {0, 1, 2, 7}) {
      std::vector<std::uint64_t> masks(n), gens(g);
      for (auto& m : masks) m = rng() & 0xFFF;
      for (auto& x : gens) x = (rng() & rng()) & 0xFFF;
      std::vector<std::uint8_t> want(n);
      for (std::size_t j = 0; j < n; ++j) {
        bool face = true;
        for (auto x : gens) face = face && (x & ~masks[j]) != 0;
        want[j] = face;
      }
      for (const auto* k : variants()) {
        std::vector<std::uint8_t> got(n, 7);
        k->face_filter(masks.data(), n, gens.data(), g, got.data());
        CHECK_MESSAGE(got == want, k->name, " n=", n, " g=", g);
      }
    }
  }
}
