#include "crlab/subspace.hpp"

#include "crlab/error.hpp"

namespace crlab {

namespace {

Mat stack_vectorized(std::size_t rows, std::size_t cols,
                     const std::vector<Mat> &mats) {
  Mat stacked(mats.size(), rows * cols);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].rows() != rows || mats[k].cols() != cols)
      throw Error(ErrorKind::SizeMismatch, "span: matrices of differing shape");
    for (std::size_t e = 0; e < rows * cols; ++e)
      stacked(k, e) = mats[k].entries()[e];
  }
  return stacked;
}

void require_same_shape(const MatrixSubspace &v, const MatrixSubspace &w) {
  if (v.rows() != w.rows() || v.cols() != w.cols())
    throw Error(ErrorKind::SizeMismatch, "subspaces live in different ambients");
}

} // namespace

MatrixSubspace::MatrixSubspace(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), echelon_(0, rows * cols) {}

MatrixSubspace MatrixSubspace::span(std::size_t n, const std::vector<Mat> &mats) {
  return span(n, n, mats);
}

MatrixSubspace MatrixSubspace::span(std::size_t rows, std::size_t cols,
                                    const std::vector<Mat> &mats) {
  auto ech = rref(stack_vectorized(rows, cols, mats));
  return MatrixSubspace(rows, cols, std::move(ech.reduced),
                        std::move(ech.pivots));
}

MatrixSubspace MatrixSubspace::full(std::size_t n) { return full(n, n); }

MatrixSubspace MatrixSubspace::full(std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots(rows * cols);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    pivots[i] = i;
  return MatrixSubspace(rows, cols, Mat::identity(rows * cols),
                        std::move(pivots));
}

std::size_t MatrixSubspace::ambient() const {
  if (rows_ != cols_)
    throw Error(ErrorKind::SizeMismatch, "rectangular space has no side length");
  return rows_;
}

Mat MatrixSubspace::basis_element(std::size_t i) const {
  const auto r = echelon_.row(i);
  return Mat(rows_, cols_, std::vector<Rational>(r.begin(), r.end()));
}

std::vector<Mat> MatrixSubspace::basis() const {
  std::vector<Mat> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    out.push_back(basis_element(i));
  return out;
}

std::vector<Rational> MatrixSubspace::residual(const Mat &m) const {
  if (m.rows() != rows_ || m.cols() != cols_)
    throw Error(ErrorKind::SizeMismatch, "matrix does not match the ambient");
  std::vector<Rational> v = m.entries();
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (is_zero(f))
      continue;
    for (std::size_t e = pivots_[r]; e < v.size(); ++e)
      if (!is_zero(echelon_(r, e)))
        v[e] -= f * echelon_(r, e);
  }
  return v;
}

bool MatrixSubspace::contains(const Mat &m) const {
  for (const auto &x : residual(m))
    if (!is_zero(x))
      return false;
  return true;
}

std::vector<Rational> MatrixSubspace::coordinates(const Mat &m) const {
  if (!contains(m))
    throw Error(ErrorKind::InvalidArgument, "matrix is not in the subspace");
  std::vector<Rational> c(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    c[r] = m.entries()[pivots_[r]];
  return c;
}

Mat MatrixSubspace::combination(const std::vector<Rational> &coeffs) const {
  if (coeffs.size() != dim())
    throw Error(ErrorKind::SizeMismatch, "coefficient count != dim");
  std::vector<Rational> v(rows_ * cols_);
  for (std::size_t r = 0; r < dim(); ++r) {
    if (is_zero(coeffs[r]))
      continue;
    for (std::size_t e = 0; e < v.size(); ++e)
      if (!is_zero(echelon_(r, e)))
        v[e] += coeffs[r] * echelon_(r, e);
  }
  return Mat(rows_, cols_, std::move(v));
}

MatrixSubspace MatrixSubspace::adjoin_identity() const {
  auto mats = basis();
  mats.push_back(Mat::identity(ambient()));
  return span(rows_, cols_, mats);
}

MatrixSubspace conjugate(const MatrixSubspace &v, const Mat &p) {
  const std::size_t n = v.ambient();
  if (p.rows() != n || p.cols() != n)
    throw Error(ErrorKind::SizeMismatch, "conjugating matrix has wrong size");
  const Mat p_inv = inverse(p);
  std::vector<Mat> mats;
  for (const auto &a : v.basis())
    mats.push_back(p * a * p_inv);
  return MatrixSubspace::span(n, mats);
}

MatrixSubspace transpose_space(const MatrixSubspace &v) {
  std::vector<Mat> mats;
  for (const auto &a : v.basis())
    mats.push_back(a.transpose());
  return MatrixSubspace::span(v.cols(), v.rows(), mats);
}

MatrixSubspace sum(const MatrixSubspace &v, const MatrixSubspace &w) {
  require_same_shape(v, w);
  auto mats = v.basis();
  for (auto &b : w.basis())
    mats.push_back(std::move(b));
  return MatrixSubspace::span(v.rows(), v.cols(), mats);
}

MatrixSubspace intersect(const MatrixSubspace &v, const MatrixSubspace &w) {
  require_same_shape(v, w);
  // Zassenhaus: rows (v_i | v_i) and (w_j | 0); after elimination the rows
  // with a zero left half span V ∩ W in their right half.
  const std::size_t len = v.rows() * v.cols();
  Mat z(v.dim() + w.dim(), 2 * len);
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t e = 0; e < len; ++e) {
      z(i, e) = v.echelon()(i, e);
      z(i, len + e) = v.echelon()(i, e);
    }
  for (std::size_t j = 0; j < w.dim(); ++j)
    for (std::size_t e = 0; e < len; ++e)
      z(v.dim() + j, e) = w.echelon()(j, e);
  const auto ech = rref(z);
  std::vector<Mat> mats;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] < len)
      continue;
    std::vector<Rational> right(len);
    for (std::size_t e = 0; e < len; ++e)
      right[e] = ech.reduced(r, len + e);
    mats.emplace_back(v.rows(), v.cols(), std::move(right));
  }
  return MatrixSubspace::span(v.rows(), v.cols(), mats);
}

bool is_algebra(const MatrixSubspace &v) {
  const auto basis = v.basis();
  for (const auto &a : basis)
    for (const auto &b : basis)
      if (!v.contains(a * b))
        return false;
  return true;
}

bool is_jordan_closed(const MatrixSubspace &v) {
  const auto basis = v.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (!v.contains(basis[i] * basis[j] + basis[j] * basis[i]))
        return false;
  return true;
}

} // namespace crlab
