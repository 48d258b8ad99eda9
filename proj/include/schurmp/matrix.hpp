#pragma once

// Dense matrices over GF(q) and an incremental row-echelon builder.

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "schurmp/galois.hpp"

namespace schurmp {

namespace detail {

// dst[from..] += c * src[from..]
inline void axpy(const FiniteField& f, std::span<Elem> dst, std::span<const Elem> src, Elem c,
                 std::size_t from = 0) {
  if (c == 0) return;
  const std::size_t n = dst.size();
  if (f.characteristic() == 2 && c == 1) {
    for (std::size_t j = from; j < n; ++j) dst[j] ^= src[j];
    return;
  }
  if (f.characteristic() == 2) {
    for (std::size_t j = from; j < n; ++j)
      if (src[j]) dst[j] ^= f.mul(c, src[j]);
    return;
  }
  for (std::size_t j = from; j < n; ++j)
    if (src[j]) dst[j] = f.add(dst[j], f.mul(c, src[j]));
}

inline void scale(const FiniteField& f, std::span<Elem> v, Elem c) {
  if (c == 1) return;
  for (auto& x : v) x = f.mul(c, x);
}

}  // namespace detail

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix from_rows(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(Errc::LengthMismatch, "row length differs from column count");
      for (auto x : rows[i])
        if (x >= m.field_->size()) fail(Errc::FieldMismatch, "entry is not an element of " + m.field_->name());
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  static Matrix identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<std::vector<Elem>> to_rows() const {
    std::vector<std::vector<Elem>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
  }

  // First `count` rows.
  Matrix top_rows(std::size_t count) const {
    Matrix m(field_, count, cols_);
    std::copy_n(data_.begin(), count * cols_, m.data_.begin());
    return m;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Reduced row echelon form with zero rows removed.
  Matrix rref() const;
  std::size_t rank() const;
  Matrix inverse() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(Errc::LengthMismatch, "matrix product dimensions");
    if (!same_field(a.field_, b.field_)) fail(Errc::FieldMismatch, "matrix product over different fields");
    const auto& f = *a.field_;
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) detail::axpy(f, c.row(i), b.row(k), a(i, k));
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_field(a.field_, b.field_) && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

// Incrementally maintained basis in row echelon form: rows sorted by pivot,
// each row zero before its unit pivot.
class RowEchelon {
 public:
  RowEchelon(FieldPtr field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool full() const noexcept { return rows_.size() == cols_; }

  // Reduces `v` in place against the basis; returns the first nonzero column
  // of the remainder, or cols() when v lies in the span.
  std::size_t reduce(std::span<Elem> v) const {
    const auto& f = *field_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto p = pivots_[i];
      if (v[p]) detail::axpy(f, v, rows_[i], f.neg(v[p]), p);
    }
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j]) return j;
    return cols_;
  }

  bool contains(std::span<const Elem> v) const {
    std::vector<Elem> w(v.begin(), v.end());
    return reduce(w) == cols_;
  }

  // Returns true when the vector enlarged the span.
  bool insert(std::span<const Elem> v) {
    if (v.size() != cols_) fail(Errc::LengthMismatch, "vector length differs from echelon width");
    std::vector<Elem> w(v.begin(), v.end());
    const auto lead = reduce(w);
    if (lead == cols_) return false;
    detail::scale(*field_, w, field_->inv(w[lead]));
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
  }

  // Canonical reduced row echelon form.
  Matrix to_rref() const {
    const auto& f = *field_;
    std::vector<std::vector<Elem>> r = rows_;
    for (std::size_t i = r.size(); i-- > 0;)
      for (std::size_t j = i + 1; j < r.size(); ++j) {
        const auto c = r[i][pivots_[j]];
        if (c) detail::axpy(f, r[i], r[j], f.neg(c), pivots_[j]);
      }
    return Matrix::from_rows(field_, cols_, r);
  }

  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  FieldPtr field_;
  std::size_t cols_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

inline Matrix Matrix::rref() const {
  RowEchelon e(field_, cols_);
  for (std::size_t i = 0; i < rows_ && !e.full(); ++i) e.insert(row(i));
  return e.to_rref();
}

inline std::size_t Matrix::rank() const {
  RowEchelon e(field_, cols_);
  for (std::size_t i = 0; i < rows_ && !e.full(); ++i) e.insert(row(i));
  return e.rank();
}

inline Matrix Matrix::inverse() const {
  if (rows_ != cols_) fail(Errc::NotSquare, "inverse of a non-square matrix");
  const auto& f = *field_;
  const std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(row(i).begin(), row(i).end(), aug.row(i).begin());
    aug(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && aug(piv, c) == 0) ++piv;
    if (piv == n) fail(Errc::Singular, "matrix is not invertible");
    if (piv != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(c, j));
    detail::scale(f, aug.row(c), f.inv(aug(c, c)));
    for (std::size_t i = 0; i < n; ++i)
      if (i != c && aug(i, c)) detail::axpy(f, aug.row(i), aug.row(c), f.neg(aug(i, c)));
  }
  Matrix inv(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace schurmp
