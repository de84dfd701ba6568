#pragma once

#include "crlab/commrank.hpp"
#include "crlab/constructions.hpp"
#include "crlab/subspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crlab {

/// First random integer combination of the basis with nonzero charpoly
/// discriminant (n distinct eigenvalues over C). nullopt after `trials`
/// misses, which proves nothing.
std::optional<Mat> find_distinct_eigenvalue_element(const MatrixSubspace &v,
                                                    std::size_t trials,
                                                    std::uint64_t seed);

struct FlandersReport {
  BoundStatus status = BoundStatus::Pass;
  std::size_t rows = 0, cols = 0;
  std::size_t dim = 0;
  std::size_t k_hat = 0; // largest member rank seen
  std::size_t bound = 0; // k_hat * max(rows, cols)
  long slack = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

/// Flanders: a space of m x n matrices of rank <= k has dim <= k max(m, n).
/// k_hat is estimated from random members, so FAIL means "k_hat too low or
/// the bound is violated"; with enough trials only the former happens.
FlandersReport flanders_check(const MatrixSubspace &v, std::size_t trials,
                              std::uint64_t seed);

enum class StructureStatus {
  MatchesVk,
  MatchesVkTranspose,
  Exceptional,
  NoMatch,
  NotEqualityCase,
};
std::string to_string(StructureStatus s);

struct StructureVerdict {
  StructureStatus status = StructureStatus::NoMatch;
  std::string tag; // corner variant when Exceptional
  std::size_t n = 0, dim = 0, k_hat = 0;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> l;
  // Recovered chain U1 c U2 as column bases, in the coordinates of V (or of
  // V^T for the transpose match).
  Mat u1, u2;
  std::vector<std::size_t> chain_dims;
  // The match was found on V^T (MatchesVkTranspose, or an Exceptional tag).
  bool transposed = false;
  // conjugate(V, witness) is the canonical space v_k(n, k_hat, l) or
  // exceptional_space(n, k_hat, tag), transposed when `transposed`.
  std::optional<Mat> witness;
  std::string diagnostics;
  std::size_t trials = 0;
  std::uint64_t seed = 0;

  bool matched() const {
    return status == StructureStatus::MatchesVk ||
           status == StructureStatus::MatchesVkTranspose ||
           status == StructureStatus::Exceptional;
  }
};

/// Tries to recognize V as similar to v_k(n, k_hat, l), its transpose, or
/// (for n - k_hat <= 3) an exceptional corner variant. Every match is
/// confirmed by exact comparison of canonical bases; failures are verdicts.
StructureVerdict structure_check(const MatrixSubspace &v, std::size_t trials,
                                 std::uint64_t seed);

enum class ReportStatus { Pass, Fail, NotCovered };
std::string to_string(ReportStatus s);

struct AlgebraStructureReport {
  ReportStatus status = ReportStatus::NotCovered;
  bool is_algebra = false;
  std::size_t dim = 0;
  std::optional<std::size_t> bound;
  bool equality = false;
  StructureVerdict structure;
};

/// For an algebra with commutators of rank <= k at the equality dimension,
/// the block form must be recovered: PASS if it is, FAIL if not, and
/// NOT_COVERED when V is not an algebra or not at equality.
AlgebraStructureReport algebra_structure_report(const MatrixSubspace &v,
                                                std::size_t trials,
                                                std::uint64_t seed);

} // namespace crlab
