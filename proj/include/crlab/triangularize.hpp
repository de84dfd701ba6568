#pragma once

#include "crlab/algebraic.hpp"
#include "crlab/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crlab {

using AlgMat = Matrix<AlgebraicNumber>;

enum class FamilySide { Left, Right, Zero };
std::string to_string(FamilySide s);

/// Shared direction of all commutators: LEFT means every [A, B] is x0 y^T,
/// RIGHT means every [A, B] is y x0^T. x0 is an n x 1 column whose first
/// nonzero entry is 1, empty for ZERO.
struct RankOneFamily {
  FamilySide side = FamilySide::Zero;
  Mat x0;
};

/// Checks all basis-pair commutators exactly. Throws INCONSISTENT (with the
/// offending pair) if one has rank >= 2 or if no direction is shared. By
/// bilinearity a shared direction on basis pairs already covers all pairs.
RankOneFamily classify_rank_one_family(const MatrixSubspace &v);

/// P with P^-1 A P upper triangular for every basis element A. P is rational
/// unless an eigenvalue outside Q was needed; then it lives over
/// Q[t]/(extension_modulus).
struct TriangularizationResult {
  std::size_t n = 0;
  std::optional<Mat> change_of_basis;
  std::optional<RationalPolynomial> extension_modulus;
  std::optional<AlgMat> extended_change_of_basis;
  /// Dimensions of the invariant flag spanned by the leading columns of P.
  std::vector<std::size_t> chain_dims;
  /// Strictly lower part of P^-1 A P per basis element; all zero.
  std::vector<Mat> certificate;
  std::vector<AlgMat> extended_certificate;

  bool used_extension() const { return extension_modulus.has_value(); }
};

/// Common-eigenvector recursion for commuting spaces. Throws NON_COMMUTING
/// with a witness pair otherwise.
TriangularizationResult triangularize_commuting(const MatrixSubspace &v);

/// Invariant-subspace recursion for spaces with rank <= 1 commutators:
/// B0 = A - lambda I for a non-scalar A; use ker B0 if invariant, else the
/// range of B0.
TriangularizationResult triangularize_rank_one(const MatrixSubspace &v);

/// True iff P^-1 A P is upper triangular for every basis element A.
/// Throws Singular for singular P.
bool verify_triangular(const MatrixSubspace &v, const Mat &p);
bool verify_triangular(const MatrixSubspace &v, const AlgMat &p);

} // namespace crlab
