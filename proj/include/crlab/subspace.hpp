#pragma once

#include "crlab/linalg.hpp"

#include <cstddef>
#include <vector>

namespace crlab {

/// A linear space of rows x cols rational matrices, stored as the reduced
/// row echelon basis of the row-major vectorizations. Two equal spaces have
/// bit-identical stored bases, so equality is structural.
class MatrixSubspace {
public:
  /// Zero space of n x n matrices.
  explicit MatrixSubspace(std::size_t n = 0) : MatrixSubspace(n, n) {}
  MatrixSubspace(std::size_t rows, std::size_t cols);

  /// Span of square matrices of side n (n is needed for the empty list).
  static MatrixSubspace span(std::size_t n, const std::vector<Mat> &mats);
  static MatrixSubspace span(std::size_t rows, std::size_t cols,
                             const std::vector<Mat> &mats);
  /// All of M_n.
  static MatrixSubspace full(std::size_t n);
  static MatrixSubspace full(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length n; throws SizeMismatch for rectangular spaces.
  std::size_t ambient() const;
  std::size_t dim() const { return echelon_.rows(); }

  /// Canonical basis, reshaped to rows x cols.
  std::vector<Mat> basis() const;
  Mat basis_element(std::size_t i) const;
  /// The dim x (rows*cols) echelon matrix itself.
  const Mat &echelon() const { return echelon_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  bool contains(const Mat &m) const;
  /// Coordinates of m in the canonical basis; throws InvalidArgument if
  /// m is not in the space.
  std::vector<Rational> coordinates(const Mat &m) const;
  /// sum_i coeffs[i] * basis_i.
  Mat combination(const std::vector<Rational> &coeffs) const;

  /// Span of this space and the identity.
  MatrixSubspace adjoin_identity() const;

  friend bool operator==(const MatrixSubspace &a, const MatrixSubspace &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.echelon_ == b.echelon_;
  }

private:
  MatrixSubspace(std::size_t rows, std::size_t cols, Mat echelon,
                 std::vector<std::size_t> pivots)
      : rows_(rows), cols_(cols), echelon_(std::move(echelon)),
        pivots_(std::move(pivots)) {}
  /// Residual of a vectorized matrix after reduction by the basis.
  std::vector<Rational> residual(const Mat &m) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Mat echelon_;
  std::vector<std::size_t> pivots_;
};

/// {P A P^-1 : A in V}. Throws Singular for singular P.
MatrixSubspace conjugate(const MatrixSubspace &v, const Mat &p);

/// {A^T : A in V}.
MatrixSubspace transpose_space(const MatrixSubspace &v);

MatrixSubspace sum(const MatrixSubspace &v, const MatrixSubspace &w);
MatrixSubspace intersect(const MatrixSubspace &v, const MatrixSubspace &w);

/// Closed under products of basis pairs. I need not be in V.
bool is_algebra(const MatrixSubspace &v);

/// Closed under the Jordan product A o B = AB + BA.
bool is_jordan_closed(const MatrixSubspace &v);

} // namespace crlab
