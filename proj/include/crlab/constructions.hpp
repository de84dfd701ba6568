#pragma once

#include "crlab/subspace.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crlab {

// All index arguments below are 1-based, matching E_ij notation.

/// {I} + {E_ij : i <= r < j}, r = floor(n/2). Commutative, dim floor(n^2/4)+1.
MatrixSubspace schur_space(std::size_t n);

/// Valid split parameters l for the (n-k) x (n-k) Schur corner.
std::vector<std::size_t> valid_splits(std::size_t n, std::size_t k);

/// {I} + {E_ij : i <= k} + {E_ij : k < i <= k+l < j}: a free k x n band on
/// top of a Schur corner. Throws InvalidArgument for k >= n or a bad l.
MatrixSubspace v_k(std::size_t n, std::size_t k, std::size_t l);
MatrixSubspace vk_transpose(std::size_t n, std::size_t k, std::size_t l);

enum class Thm2Side { LastRow, FirstCol };

/// All matrices whose last row vanishes off the diagonal (LastRow), or whose
/// first column vanishes below the diagonal (FirstCol). dim n^2 - n + 1.
MatrixSubspace thm2_space(std::size_t n, Thm2Side side);

/// Shape of the commutative corner C in the rank-one extremal spaces.
enum class CornerVariant {
  Generic,        // Schur corner with split l
  Diag3,          // 3x3 diagonals
  NilRank1PlusC,  // span{I_2, N} (+) C, N a rank-one nilpotent
  NilRank2,       // span{I_3, N, N^2}, N a rank-two nilpotent
  Diag2,          // 2x2 diagonals
  Scalar,         // 1x1 scalars
};
std::string to_string(CornerVariant v);
CornerVariant parse_corner_variant(const std::string &tag);

/// Side length of the corner a non-generic variant requires.
std::size_t corner_size(CornerVariant v);

/// Basis of the corner C itself (size c x c).
std::vector<Mat> corner_basis(CornerVariant v, std::size_t c, std::size_t l = 0);

/// Free top k x n band plus the corner C in the southeast (n-k) block plus I.
/// For Generic this is v_k(n, k, l).
MatrixSubspace exceptional_space(std::size_t n, std::size_t k, CornerVariant v,
                                 std::size_t l = 0);

/// Rank-one extremal spaces: first row free, corner C of size n-1 below.
MatrixSubspace rank_one_max_space(std::size_t n, CornerVariant v,
                                  std::size_t l = 0);

/// Rank <= k space of m x n_cols matrices with dim k * max(m, n_cols):
/// the first k rows when n_cols >= m, otherwise the first k columns.
MatrixSubspace flanders_space(std::size_t m, std::size_t n_cols, std::size_t k);

/// A with lambda_i at (i+1, i), B with mu_i at (i, i+1), i = 1..s.
std::pair<Mat, Mat> bidiagonal_witness_pair(std::size_t n, std::size_t s,
                                            const std::vector<Rational> &lambdas,
                                            const std::vector<Rational> &mus);

enum class Family {
  Schur,
  Vk,
  VkTranspose,
  Thm2LastRow,
  Thm2FirstCol,
  RankOneMax,
  Flanders,
  Exceptional,
};
std::string to_string(Family f);
Family parse_family(const std::string &name);

/// Parameters for one named construction. `m` is the row count of a
/// Flanders space (defaults to n).
struct FamilySpec {
  Family family = Family::Schur;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> l;
  std::optional<std::size_t> m;
  CornerVariant variant = CornerVariant::Generic;
};

/// Builds the space named by a spec; l defaults to floor((n-k)/2) (or
/// floor((n-1)/2) for rank-one spaces).
MatrixSubspace build(const FamilySpec &spec);

} // namespace crlab
