#pragma once

#include "modcurve/exact/bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace modcurve::exact {

/// Dense row-major matrix over a ring T (BigInt or Rational in practice).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == 0; });
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    T tmp;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) == 0) continue;
          tmp = aik * b(k, j);
          p(i, j) += tmp;
        }
      }
    return p;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix vstack(const Matrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (below.cols_ != cols_) throw std::invalid_argument("vstack column mismatch");
    Matrix m(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + data_.size());
    return m;
  }

  Matrix hstack(const Matrix& right) const {
    if (right.rows_ != rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix m(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
      for (std::size_t c = 0; c < right.cols_; ++c) m(r, cols_ + c) = right(r, c);
    }
    return m;
  }

  Matrix columns(std::size_t first, std::size_t count) const {
    Matrix m(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
    return m;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<BigInt>;

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

struct EchelonForm {
  RationalMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape
/// of the input is preserved.
inline EchelonForm rref(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pr = 0;
  Rational factor, tmp;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = pr;
    while (sel < rows && m(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(pr, j));
    if (m(pr, c) != 1) {
      Rational inv = 1 / m(pr, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(pr, j) != 0) m(pr, j) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || m(r, c) == 0) continue;
      factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (m(pr, j) == 0) continue;
        tmp = factor * m(pr, j);
        m(r, j) -= tmp;
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

/// Basis of the right kernel, one basis vector per column.
inline RationalMatrix kernel_basis(const RationalMatrix& m) {
  auto [r, pivots] = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RationalMatrix basis(cols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(i, f);
  }
  return basis;
}

/// Solves basis * X = target where the columns of target lie in the column
/// span of basis (whose columns must be independent). Throws otherwise.
inline RationalMatrix solve_in_span(const RationalMatrix& basis, const RationalMatrix& target) {
  const std::size_t k = basis.cols();
  auto [r, pivots] = rref(basis.hstack(target));
  if (pivots.size() != k || (k > 0 && pivots.back() != k - 1))
    throw std::domain_error("target is not in the span of an independent basis");
  RationalMatrix x(k, target.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < target.cols(); ++j) x(i, j) = r(i, k + j);
  return x;
}

/// Matrix of the restriction of `op` to the invariant subspace spanned by
/// the columns of `basis`, in that basis.
inline RationalMatrix restrict_to(const RationalMatrix& op, const RationalMatrix& basis) {
  return solve_in_span(basis, op * basis);
}

}  // namespace modcurve::exact
