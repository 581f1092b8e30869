#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ghwlab {

constexpr bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime field F_p with p <= 2^16. Elements are canonical residues in [0, p)
// stored as uint16_t; all operations return canonical residues.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint32_t p) : p_(p) {
    if (p < 2 || p > 65536 || !is_prime(p))
      throw std::invalid_argument("field characteristic must be a prime <= 65536, got " +
                                  std::to_string(p));
  }

  std::uint32_t p() const { return p_; }

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
    std::uint32_t s = static_cast<std::uint32_t>(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<std::uint16_t>(s);
  }

  std::uint16_t sub(std::uint16_t a, std::uint16_t b) const {
    std::uint32_t s = static_cast<std::uint32_t>(a) + p_ - b;
    if (s >= p_) s -= p_;
    return static_cast<std::uint16_t>(s);
  }

  std::uint16_t neg(std::uint16_t a) const {
    return a == 0 ? 0 : static_cast<std::uint16_t>(p_ - a);
  }

  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    return static_cast<std::uint16_t>(static_cast<std::uint64_t>(a) * b % p_);
  }

  // extended Euclid; throws on 0
  std::uint16_t inv(std::uint16_t a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<std::uint16_t>(t);
  }

  std::uint16_t pow(std::uint16_t base, std::uint32_t e) const {
    std::uint16_t acc = 1;
    std::uint16_t b = base;
    while (e) {
      if (e & 1) acc = mul(acc, b);
      b = mul(b, b);
      e >>= 1;
    }
    return acc;
  }

  // canonical residue of an arbitrary integer
  std::uint16_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint16_t>(r);
  }

  bool operator==(const FieldSpec&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace ghwlab
