#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ghwlab/field.hpp"

namespace ghwlab {

// Dense matrix over a prime field, row-major canonical residues.
class FMatrix {
 public:
  FMatrix(FieldSpec f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

  // entries are reduced mod p, so negative literals are fine in fixtures
  static FMatrix from_rows(FieldSpec f, const std::vector<std::vector<long long>>& rows);
  static FMatrix identity(FieldSpec f, std::size_t n);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint16_t at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint16_t v) { e_[r * cols_ + c] = v; }

  std::span<const std::uint16_t> row(std::size_t r) const {
    return {e_.data() + r * cols_, cols_};
  }
  std::span<std::uint16_t> row_mut(std::size_t r) { return {e_.data() + r * cols_, cols_}; }

  FMatrix transposed() const;
  bool is_zero() const;
  std::string to_string() const;

  bool operator==(const FMatrix&) const = default;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<std::uint16_t> e_;
};

struct RrefResult {
  FMatrix matrix;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

// Reduced row echelon form. Deterministic: columns are scanned left to right,
// the topmost unused row with a nonzero entry becomes the pivot. The result is
// the canonical basis of the row space. p = 2 takes a packed bit-row path;
// both paths are exposed under detail for equivalence tests.
RrefResult rref(const FMatrix& m);

// Right kernel {x : m x = 0} as canonical RREF basis rows, (cols - rank) of them.
FMatrix nullspace(const FMatrix& m);

FMatrix mat_mul(const FMatrix& a, const FMatrix& b);

namespace detail {
RrefResult rref_dense(FMatrix m);
RrefResult rref_gf2(const FMatrix& m);
}  // namespace detail

// GF(2) matrix with rows packed into 64-bit words.
class PackedMatrix {
 public:
  PackedMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  // requires p == 2
  static PackedMatrix from_matrix(const FMatrix& m);
  FMatrix to_matrix() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = bits_[r * words_ + (c >> 6)];
    std::uint64_t bit = std::uint64_t{1} << (c & 63);
    if (v)
      w |= bit;
    else
      w &= ~bit;
  }

  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

  void xor_rows(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  struct Echelon {
    std::size_t rank;
    std::vector<std::size_t> pivots;
  };
  Echelon rref_in_place();

 private:
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace ghwlab
