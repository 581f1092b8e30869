#include "ghwlab/kernels.hpp"

#include <bit>

namespace ghwlab::kernels {

namespace {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void or_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

std::uint64_t popcount_words_scalar(const std::uint64_t* src, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(src[i]));
  return total;
}

void axpy_mod_u16_scalar(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t c,
                         std::uint32_t p, std::size_t n) {
  // c < p <= 65536 and entries < p, so the intermediate fits in 32 bits
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t v = dst[i] + static_cast<std::uint32_t>(c) * src[i];
    dst[i] = static_cast<std::uint16_t>(v % p);
  }
}

void nonzero_mask_u16_scalar(std::uint64_t* dst, const std::uint16_t* src, std::size_t n) {
  std::size_t nwords = (n + 63) / 64;
  for (std::size_t w = 0; w < nwords; ++w) dst[w] = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (src[i] != 0) dst[i >> 6] |= std::uint64_t{1} << (i & 63);
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend table = {
      "scalar",          xor_words_scalar,     or_words_scalar,
      popcount_words_scalar, axpy_mod_u16_scalar, nonzero_mask_u16_scalar,
  };
  return table;
}

}  // namespace ghwlab::kernels
