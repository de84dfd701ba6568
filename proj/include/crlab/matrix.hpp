#pragma once

// Dense row-major matrices over an exact field and the field-generic
// elimination routines (reduced row echelon form, kernel, inverse,
// characteristic polynomial). Rational-specific routines such as the
// fraction-free rank live in linalg.hpp.

#include "crlab/error.hpp"
#include "crlab/polynomial.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace crlab {

template <class F> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw Error(ErrorKind::SizeMismatch, "entry count != rows*cols");
  }

  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = F(1);
    return m;
  }
  /// Matrix unit E_ij (0-based indices).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    return unit(n, n, i, j);
  }
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i,
                     std::size_t j) {
    Matrix m(rows, cols);
    m(i, j) = F(1);
    return m;
  }
  static Matrix diagonal(const std::vector<F> &d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      m(i, i) = d[i];
    return m;
  }
  static Matrix column(const std::vector<F> &v) {
    return Matrix(v.size(), 1, v);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  F &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const std::vector<F> &entries() const { return data_; }
  std::span<const F> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Matrix column_at(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i)
      c(i, 0) = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  F trace() const {
    require_square("trace");
    F t(0);
    for (std::size_t i = 0; i < rows_; ++i)
      t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto &x : data_)
      if (!detail::entry_is_zero(x))
        return false;
    return true;
  }

  bool is_scalar() const {
    if (!is_square())
      return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && !detail::entry_is_zero((*this)(i, j)))
          return false;
        if (i == j && !((*this)(i, i) == (*this)(0, 0)))
          return false;
      }
    return true;
  }

  bool is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i && j < cols_; ++j)
        if (!detail::entry_is_zero((*this)(i, j)))
          return false;
    return true;
  }

  /// Entries strictly below the diagonal; everything else zero.
  Matrix strictly_lower() const {
    Matrix l(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i && j < cols_; ++j)
        l(i, j) = (*this)(i, j);
    return l;
  }

  /// Rows [r0, r0+nr) x cols [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix &b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        (*this)(r0 + i, c0 + j) = b(i, j);
  }

  /// Row-major flattening as a single row.
  Matrix vectorize() const { return Matrix(1, data_.size(), data_); }

  Matrix &operator+=(const Matrix &o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      data_[i] += o.data_[i];
    return *this;
  }
  Matrix &operator-=(const Matrix &o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      data_[i] -= o.data_[i];
    return *this;
  }
  Matrix &operator*=(const F &s) {
    for (auto &x : data_)
      x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F &s) { return a *= s; }
  friend Matrix operator*(const F &s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto &x : a.data_)
      x = F(0) - x;
    return a;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorKind::SizeMismatch, "matrix product: inner dimensions");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F &aik = a(i, k);
        if (detail::entry_is_zero(aik))
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <class G, class Fn> Matrix<G> map(Fn &&fn) const {
    std::vector<G> out;
    out.reserve(data_.size());
    for (const auto &x : data_)
      out.push_back(fn(x));
    return Matrix<G>(rows_, cols_, std::move(out));
  }

private:
  void require_square(const char *what) const {
    if (!is_square())
      throw Error(ErrorKind::SizeMismatch, std::string(what) +
                                               ": matrix is not square");
  }
  void require_same_shape(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorKind::SizeMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <class F> Matrix<F> commutator(const Matrix<F> &a, const Matrix<F> &b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw Error(ErrorKind::SizeMismatch,
                "commutator requires square matrices of equal size");
  return a * b - b * a;
}

/// Horizontal concatenation [a | b].
template <class F> Matrix<F> hconcat(const Matrix<F> &a, const Matrix<F> &b) {
  if (a.rows() != b.rows() && !a.empty() && !b.empty())
    throw Error(ErrorKind::SizeMismatch, "hconcat: row counts differ");
  const std::size_t rows = a.empty() ? b.rows() : a.rows();
  Matrix<F> c(rows, a.cols() + b.cols());
  if (!a.empty())
    c.set_block(0, 0, a);
  if (!b.empty())
    c.set_block(0, a.cols(), b);
  return c;
}

/// Block diagonal diag(a, b).
template <class F> Matrix<F> direct_sum(const Matrix<F> &a, const Matrix<F> &b) {
  Matrix<F> c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

// ---------------------------------------------------------------------------
// Elimination

template <class F> struct RowEchelon {
  Matrix<F> reduced;               // RREF; zero rows removed
  std::vector<std::size_t> pivots; // pivot column of each row, increasing
};

/// Gauss-Jordan to reduced row echelon form. Pivot search takes the first
/// nonzero entry at the lowest row index.
template <class F> RowEchelon<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c)))
      ++p;
    if (p == m.rows())
      continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j)
        std::swap(m(p, j), m(r, j));
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c)))
        continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.block(0, 0, r, m.cols()), std::move(pivots)};
}

template <class F> std::size_t rank_by_elimination(const Matrix<F> &m) {
  // Forward elimination only.
  Matrix<F> a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c)))
      ++p;
    if (p == a.rows())
      continue;
    if (p != r)
      for (std::size_t j = c; j < a.cols(); ++j)
        std::swap(a(p, j), a(r, j));
    const F inv = F(1) / a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, c)))
        continue;
      const F f = a(i, c) * inv;
      for (std::size_t j = c; j < a.cols(); ++j)
        a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Basis of the right null space as the columns of a cols x (cols - rank)
/// matrix. Free variables are taken in increasing column order.
template <class F> Matrix<F> kernel_matrix(const Matrix<F> &m) {
  const auto ech = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots)
    is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j])
      free.push_back(j);
  Matrix<F> k(n, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = F(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      k(ech.pivots[r], f) = F(0) - ech.reduced(r, free[f]);
  }
  return k;
}

/// Column space basis: the pivot columns of m.
template <class F> Matrix<F> column_space(const Matrix<F> &m) {
  const auto ech = rref(m);
  Matrix<F> c(m.rows(), ech.pivots.size());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i)
      c(i, k) = m(i, ech.pivots[k]);
  return c;
}

template <class F> Matrix<F> inverse(const Matrix<F> &m) {
  if (!m.is_square())
    throw Error(ErrorKind::SizeMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  auto ech = rref(hconcat(m, Matrix<F>::identity(n)));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1)
    throw Error(ErrorKind::Singular, "matrix is singular");
  return ech.reduced.block(0, n, n, n);
}

template <class F> F determinant_by_elimination(Matrix<F> a) {
  if (!a.is_square())
    throw Error(ErrorKind::SizeMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c)))
      ++p;
    if (p == n)
      return F(0);
    if (p != c) {
      for (std::size_t j = c; j < n; ++j)
        std::swap(a(p, j), a(c, j));
      det = F(0) - det;
    }
    det *= a(c, c);
    const F inv = F(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c)))
        continue;
      const F f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recursion
/// (divisions only by the integers 1..n; characteristic zero).
template <class F> Polynomial<F> characteristic_polynomial(const Matrix<F> &m) {
  if (!m.is_square())
    throw Error(ErrorKind::SizeMismatch, "charpoly of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<F> c(n + 1, F(0));
  c[n] = F(1);
  Matrix<F> mk = Matrix<F>::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<F> next = m * mk;
    for (std::size_t i = 0; i < n; ++i)
      next(i, i) += c[n - k + 1];
    mk = std::move(next);
    const F tr = (m * mk).trace();
    c[n - k] = (F(0) - tr) / F(static_cast<long>(k));
  }
  return Polynomial<F>(std::move(c));
}

/// True iff every column of `sub` lies in the column space of `basis`.
template <class F>
bool columns_within(const Matrix<F> &sub, const Matrix<F> &basis) {
  if (sub.cols() == 0)
    return true;
  return rank_by_elimination(hconcat(basis, sub)) ==
         rank_by_elimination(basis);
}

} // namespace crlab
