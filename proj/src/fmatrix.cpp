#include "ghwlab/fmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ghwlab/kernels.hpp"

namespace ghwlab {

FMatrix FMatrix::from_rows(FieldSpec f, const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  for (const auto& row : rows)
    if (row.size() != c) throw std::invalid_argument("ragged row lengths");
  FMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, f.reduce(rows[i][j]));
  return m;
}

FMatrix FMatrix::identity(FieldSpec f, std::size_t n) {
  FMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FMatrix FMatrix::transposed() const {
  FMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

bool FMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint16_t v) { return v == 0; });
}

std::string FMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

PackedMatrix PackedMatrix::from_matrix(const FMatrix& m) {
  if (m.field().p() != 2) throw std::invalid_argument("packed rows require characteristic 2");
  PackedMatrix pm(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) pm.set(i, j, true);
  return pm;
}

FMatrix PackedMatrix::to_matrix() const {
  FMatrix m(FieldSpec(2), rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) m.set(i, j, 1);
  return m;
}

void PackedMatrix::xor_rows(std::size_t dst, std::size_t src) {
  kernels::xor_words(row(dst), row(src), words_);
}

void PackedMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a), row(a) + words_, row(b));
}

PackedMatrix::Echelon PackedMatrix::rref_in_place() {
  Echelon e{0, {}};
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows_ && !get(sel, col)) ++sel;
    if (sel == rows_) continue;
    swap_rows(sel, pivot_row);
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != pivot_row && get(i, col)) xor_rows(i, pivot_row);
    e.pivots.push_back(col);
    ++pivot_row;
  }
  e.rank = pivot_row;
  return e;
}

namespace detail {

RrefResult rref_dense(FMatrix m) {
  const FieldSpec& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      auto a = m.row_mut(sel), b = m.row_mut(pivot_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    std::uint16_t scale = f.inv(m.at(pivot_row, col));
    if (scale != 1) {
      auto r = m.row_mut(pivot_row);
      for (auto& v : r) v = f.mul(v, scale);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row) continue;
      std::uint16_t c = m.at(i, col);
      if (c == 0) continue;
      kernels::axpy_mod_u16(m.row_mut(i).data(), m.row(pivot_row).data(), f.neg(c), f.p(),
                            m.cols());
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(m), pivots.size(), std::move(pivots)};
}

RrefResult rref_gf2(const FMatrix& m) {
  PackedMatrix pm = PackedMatrix::from_matrix(m);
  auto e = pm.rref_in_place();
  return {pm.to_matrix(), e.rank, std::move(e.pivots)};
}

}  // namespace detail

RrefResult rref(const FMatrix& m) {
  if (m.field().p() == 2) return detail::rref_gf2(m);
  return detail::rref_dense(m);
}

FMatrix nullspace(const FMatrix& m) {
  RrefResult r = rref(m);
  const FieldSpec& f = m.field();
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivots) is_pivot[c] = true;

  FMatrix basis(f, n - r.rank, n);
  std::size_t row = 0;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.set(row, free_col, 1);
    for (std::size_t i = 0; i < r.rank; ++i)
      basis.set(row, r.pivots[i], f.neg(r.matrix.at(i, free_col)));
    ++row;
  }
  // canonicalize so callers can compare kernels structurally
  return rref(basis).matrix;
}

FMatrix mat_mul(const FMatrix& a, const FMatrix& b) {
  if (a.field() != b.field()) throw std::invalid_argument("field mismatch");
  if (a.cols() != b.rows()) throw std::invalid_argument("inner dimension mismatch");
  const FieldSpec& f = a.field();
  FMatrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row_mut(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      std::uint16_t c = a.at(i, l);
      if (c == 0) continue;
      kernels::axpy_mod_u16(dst.data(), b.row(l).data(), c, f.p(), b.cols());
    }
  }
  return out;
}

}  // namespace ghwlab
