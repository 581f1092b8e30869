#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ghwlab::kernels {

// Word-level primitives behind packed GF(2) rows and residue rows.
// Every operation has a scalar reference implementation; on x86-64 an AVX2
// variant is compiled in and selected at runtime when the CPU supports it.
// All variants must be bit-identical; tests/unit_kernels.cpp checks that.

// dst[i] ^= src[i] for i in [0, nwords)
using XorWordsFn = void (*)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
// dst[i] |= src[i] for i in [0, nwords)
using OrWordsFn = void (*)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
// sum of popcounts over nwords
using PopcountWordsFn = std::uint64_t (*)(const std::uint64_t* src, std::size_t nwords);
// dst[i] = (dst[i] + c * src[i]) mod p for i in [0, n); inputs are canonical residues < p
using AxpyModU16Fn = void (*)(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t c,
                              std::uint32_t p, std::size_t n);
// dst[w] = bitmask of nonzero positions of src; writes ceil(n/64) words, tail zero-padded
using NonzeroMaskU16Fn = void (*)(std::uint64_t* dst, const std::uint16_t* src, std::size_t n);

struct Backend {
  const char* name;
  XorWordsFn xor_words;
  OrWordsFn or_words;
  PopcountWordsFn popcount_words;
  AxpyModU16Fn axpy_mod_u16;
  NonzeroMaskU16Fn nonzero_mask_u16;
};

const Backend& scalar_backend();
// null when not compiled in or the CPU lacks AVX2
const Backend* avx2_backend();

// Active backend; defaults to the fastest one available.
const Backend& active();
// Force a backend by name ("scalar", "avx2"); false if unavailable. Test hook.
bool select(std::string_view name);

inline void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  active().xor_words(dst, src, n);
}
inline void or_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  active().or_words(dst, src, n);
}
inline std::uint64_t popcount_words(const std::uint64_t* src, std::size_t n) {
  return active().popcount_words(src, n);
}
inline void axpy_mod_u16(std::uint16_t* dst, const std::uint16_t* src, std::uint16_t c,
                         std::uint32_t p, std::size_t n) {
  active().axpy_mod_u16(dst, src, c, p, n);
}
inline void nonzero_mask_u16(std::uint64_t* dst, const std::uint16_t* src, std::size_t n) {
  active().nonzero_mask_u16(dst, src, n);
}

}  // namespace ghwlab::kernels
