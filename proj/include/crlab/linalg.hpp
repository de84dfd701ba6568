#pragma once

#include "crlab/field.hpp"
#include "crlab/matrix.hpp"
#include "crlab/polynomial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace crlab {

using Mat = Matrix<Rational>;
using RationalPolynomial = Polynomial<Rational>;
using ModMat = Matrix<ModP>;

/// Exact rank over Q by Bareiss fraction-free elimination. Rows are first
/// scaled to integers; pivot is the first nonzero entry at the lowest row.
std::size_t rank(const Mat &m);

/// Rank over F_p for the session screening prime.
std::size_t rank(const ModMat &m);

/// Exact determinant over Q (Bareiss).
Rational determinant(const Mat &m);

/// Basis of the right null space, one n x 1 column per vector.
std::vector<Mat> kernel_basis(const Mat &m);

/// Reduces a rational matrix into F_p (throws Singular if p divides a
/// denominator).
ModMat to_modp(const Mat &m);

/// Characteristic polynomial det(xI - M).
RationalPolynomial charpoly(const Mat &m);

/// Resultant via the Sylvester determinant.
Rational resultant(const RationalPolynomial &p, const RationalPolynomial &q);

/// Discriminant (-1)^(d(d-1)/2) res(p, p') / lead(p); 1 for degree <= 1.
Rational discriminant(const RationalPolynomial &p);

/// Discriminant of the characteristic polynomial; nonzero iff m has n
/// distinct eigenvalues over C.
Rational charpoly_discriminant(const Mat &m);

/// All distinct rational roots, increasing. Candidates come from a numerical
/// root-finder on the squarefree part and are each confirmed exactly, so the
/// returned roots are always genuine.
std::vector<Rational> rational_roots(const RationalPolynomial &p);

/// Deterministic integer-entry matrix, entries uniform in [-bound, bound].
Mat random_matrix(std::size_t rows, std::size_t cols, long bound,
                  std::uint64_t seed);

/// Same, drawing from a caller-owned engine.
Mat random_matrix(std::size_t rows, std::size_t cols, long bound,
                  std::mt19937_64 &rng);

/// Random unimodular-ish invertible integer matrix: a product of a random
/// unit lower and a random unit upper triangular matrix (determinant 1),
/// optionally followed by a row permutation.
Mat random_invertible(std::size_t n, long bound, std::mt19937_64 &rng);

/// Integer draw in [-bound, bound].
long random_coefficient(std::mt19937_64 &rng, long bound);

/// Independent child seed for stream `stream` of `seed` (splitmix64 mix), so
/// per-trial and per-chunk generators do not depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace crlab
