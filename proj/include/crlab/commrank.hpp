#pragma once

#include "crlab/subspace.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace crlab {

/// Coefficient range [-B, B] used for random members of a space.
inline constexpr long kDefaultCoefficientBound = 1'000'000;

/// Randomized estimate of max rank [A, B] over A, B in V. Only the lower
/// half is a certificate: `witness_a`, `witness_b` are members of V whose
/// commutator has exact rank `certified_lower`.
struct CommutatorProfile {
  std::size_t n = 0;
  std::size_t certified_lower = 0;
  std::size_t probable_max = 0;
  Mat witness_a, witness_b;
  /// Index of the trial that produced the witness (smallest among maxima).
  std::size_t witness_trial = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

/// Samples `trials` pairs of integer combinations of the canonical basis,
/// screens their commutator ranks mod p, then recomputes the best pair over
/// Q. Deterministic in (V, trials, seed).
CommutatorProfile max_commutator_rank(const MatrixSubspace &v,
                                      std::size_t trials, std::uint64_t seed,
                                      long coefficient_bound = kDefaultCoefficientBound);

/// Random integer combination of the canonical basis.
Mat random_member(const MatrixSubspace &v, std::mt19937_64 &rng,
                  long coefficient_bound = kDefaultCoefficientBound);

enum class RankVerdict { CertifiedNo, ProbableYes };
std::string to_string(RankVerdict v);

struct RankConditionResult {
  RankVerdict verdict = RankVerdict::ProbableYes;
  std::size_t k = 0;
  CommutatorProfile profile;
};

/// Condition (A) at level k: CERTIFIED_NO when a sampled pair has commutator
/// rank above k (the profile carries the witness), PROBABLE_YES otherwise.
RankConditionResult satisfies_rank_condition(const MatrixSubspace &v,
                                             std::size_t k, std::size_t trials,
                                             std::uint64_t seed);

/// Exact maximum of rank [E_a, E_b] over pairs of canonical basis elements.
struct BasisPairSweep {
  std::size_t max_rank = 0;
  std::size_t first = 0, second = 0;
};
BasisPairSweep basis_pair_sweep(const MatrixSubspace &v);

/// n k + floor((n - k)^2 / 4) + 1. Throws InvalidArgument unless k < n.
std::size_t dimension_bound(std::size_t n, std::size_t k);

enum class BoundStatus { Pass, Fail, NotApplicable };
std::string to_string(BoundStatus s);

struct BoundReport {
  BoundStatus status = BoundStatus::Pass;
  std::size_t dim = 0;
  std::size_t k_hat = 0;
  std::optional<std::size_t> bound;
  /// bound - dim; negative on FAIL.
  long slack = 0;
  /// For a FAIL: the sampled k-hat is certified only from below, so the
  /// failure is either an undersampled rank or a genuine counterexample.
  std::string interpretation;
  CommutatorProfile profile;
};

/// k-hat = probable max commutator rank. A space with a sampled invertible
/// commutator satisfies condition (A) for no k < n and is NOT_APPLICABLE.
BoundReport check_dimension_bound(const MatrixSubspace &v, std::size_t trials,
                                  std::uint64_t seed);

} // namespace crlab
