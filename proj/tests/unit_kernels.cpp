#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <string>
#include <vector>

#include "ghwlab/kernels.hpp"

namespace k = ghwlab::kernels;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (auto& w : v) w = rng();
  return v;
}

// sizes straddling the 4-word AVX2 stride, plus empty and odd tails
const std::size_t kWordSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 16, 31, 257};

}  // namespace

TEST_CASE("scalar backend is always available") {
  CHECK(k::scalar_backend().name == std::string("scalar"));
  CHECK(k::select("scalar"));
  CHECK(k::active().name == std::string("scalar"));
}

TEST_CASE("xor/or/popcount agree between backends") {
  const k::Backend* simd = k::avx2_backend();
  if (!simd) {
    MESSAGE("no avx2 on this host, scalar-only run");
    return;
  }
  std::mt19937_64 rng(7);
  for (std::size_t n : kWordSizes) {
    auto a = random_words(rng, n);
    auto b = random_words(rng, n);

    auto x1 = a, x2 = a;
    k::scalar_backend().xor_words(x1.data(), b.data(), n);
    simd->xor_words(x2.data(), b.data(), n);
    CHECK(x1 == x2);

    auto o1 = a, o2 = a;
    k::scalar_backend().or_words(o1.data(), b.data(), n);
    simd->or_words(o2.data(), b.data(), n);
    CHECK(o1 == o2);

    CHECK(k::scalar_backend().popcount_words(a.data(), n) == simd->popcount_words(a.data(), n));
  }
}

TEST_CASE("popcount matches per-word std::popcount") {
  std::mt19937_64 rng(11);
  for (std::size_t n : kWordSizes) {
    auto a = random_words(rng, n);
    std::uint64_t want = 0;
    for (auto w : a) want += std::popcount(w);
    CHECK(k::popcount_words(a.data(), n) == want);
  }
}

TEST_CASE("axpy_mod_u16 agrees and reduces into [0, p)") {
  const k::Backend* simd = k::avx2_backend();
  std::mt19937_64 rng(13);
  for (std::uint32_t p : {2u, 3u, 5u, 17u, 65521u}) {
    for (std::size_t n : {0u, 1u, 15u, 16u, 17u, 100u}) {
      std::vector<std::uint16_t> acc(n), row(n);
      for (auto& v : acc) v = static_cast<std::uint16_t>(rng() % p);
      for (auto& v : row) v = static_cast<std::uint16_t>(rng() % p);
      std::uint16_t c = static_cast<std::uint16_t>(1 + rng() % (p - 1));

      auto a1 = acc, a2 = acc;
      k::scalar_backend().axpy_mod_u16(a1.data(), row.data(), c, p, n);
      for (auto v : a1) CHECK(v < p);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(a1[i] == (acc[i] + std::uint64_t(c) * row[i]) % p);
      if (simd) {
        simd->axpy_mod_u16(a2.data(), row.data(), c, p, n);
        CHECK(a1 == a2);
      }
    }
  }
}

TEST_CASE("nonzero_mask_u16 marks exactly the nonzero positions") {
  const k::Backend* simd = k::avx2_backend();
  std::mt19937_64 rng(17);
  for (std::size_t n : {0u, 1u, 5u, 16u, 17u, 63u, 64u, 65u, 130u}) {
    std::vector<std::uint16_t> v(n);
    for (auto& x : v) x = (rng() & 3) == 0 ? 0 : static_cast<std::uint16_t>(rng() & 0xffff);
    std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> m1(words, ~0ull), m2(words, ~0ull);
    k::scalar_backend().nonzero_mask_u16(m1.data(), v.data(), n);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(((m1[i / 64] >> (i % 64)) & 1) == (v[i] != 0 ? 1u : 0u));
    // padding bits beyond n must be cleared
    if (n % 64 && words) CHECK((m1[words - 1] >> (n % 64)) == 0);
    if (simd) {
      simd->nonzero_mask_u16(m2.data(), v.data(), n);
      CHECK(m1 == m2);
    }
  }
}

TEST_CASE("backend selection round-trips") {
  CHECK_FALSE(k::select("no-such-backend"));
  if (k::avx2_backend()) {
    CHECK(k::select("avx2"));
    CHECK(k::active().name == std::string("avx2"));
  }
  CHECK(k::select("scalar"));
}
