#include "ghwlab/kernels.hpp"

#ifdef GHWLAB_HAVE_AVX2

#include <immintrin.h>

#include <bit>

namespace ghwlab::kernels {

namespace {

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

void or_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(a, b));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

// per-byte popcount via nibble lookup
inline __m256i popcount_epi8(__m256i v) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

std::uint64_t popcount_words_avx2(const std::uint64_t* src, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    // byte counts summed into the four 64-bit lanes; no overflow per vector
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_epi8(v), _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(src[i]));
  return total;
}

// interleaved 2-bit-per-lane movemask -> 16-bit lane mask
inline std::uint32_t compress_pairs(std::uint32_t x) {
  x &= 0x55555555u;
  x = (x | (x >> 1)) & 0x33333333u;
  x = (x | (x >> 2)) & 0x0f0f0f0fu;
  x = (x | (x >> 4)) & 0x00ff00ffu;
  x = (x | (x >> 8)) & 0x0000ffffu;
  return x;
}

void nonzero_mask_u16_avx2(std::uint64_t* dst, const std::uint16_t* src, std::size_t n) {
  std::size_t nwords = (n + 63) / 64;
  for (std::size_t w = 0; w < nwords; ++w) dst[w] = 0;
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    std::uint32_t eq = static_cast<std::uint32_t>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi16(v, zero)));
    std::uint64_t bits = (~compress_pairs(eq)) & 0xffffu;
    dst[i >> 6] |= bits << (i & 63);
  }
  for (; i < n; ++i)
    if (src[i] != 0) dst[i >> 6] |= std::uint64_t{1} << (i & 63);
}

// modular axpy stays scalar: the runtime modulus defeats a clean vector path
void axpy_mod_u16_plain(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t c,
                        std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t v = dst[i] + static_cast<std::uint32_t>(c) * src[i];
    dst[i] = static_cast<std::uint16_t>(v % p);
  }
}

}  // namespace

const Backend* avx2_backend() {
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  static const Backend table = {
      "avx2",           xor_words_avx2,     or_words_avx2,
      popcount_words_avx2, axpy_mod_u16_plain, nonzero_mask_u16_avx2,
  };
  return &table;
}

}  // namespace ghwlab::kernels

#endif
