#pragma once

#include "crlab/subspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crlab {

/// Largest n whose off-diagonal positions fit the 64-bit position mask.
inline constexpr std::size_t kMaskLimitN = 8;

/// Default search guard; CRLAB_MAX_N overrides it (up to kMaskLimitN).
std::size_t max_search_n();

/// Bit of the 0-based off-diagonal position (i, j) in a position mask.
constexpr std::uint64_t position_bit(std::size_t n, std::size_t i, std::size_t j) {
  return std::uint64_t{1} << (i * n + j);
}

enum class ClosureRules {
  Full,      // every [E_pq, E_ij], p < q, for lower (i, j)
  ThreeCase, // R2 only for indices strictly between j and i
};
std::string to_string(ClosureRules r);
ClosureRules parse_rules(const std::string &name);

/// span{E_ij : (i,j) in S} (+) D, with D a space of diagonal vectors held as
/// reduced echelon rows.
struct InvariantSpaceSpec {
  std::size_t n = 0;
  std::uint64_t s = 0;
  Mat d;

  std::size_t dim() const;
  /// Off-diagonal positions, 1-based, in mask order.
  std::vector<std::pair<std::size_t, std::size_t>> positions() const;
  /// Blocks of indices (1-based) when D is exactly the vectors constant on
  /// a partition; nullopt otherwise.
  std::optional<std::vector<std::vector<std::size_t>>> partition() const;
  MatrixSubspace realize() const;

  friend bool operator==(const InvariantSpaceSpec &a, const InvariantSpaceSpec &b) {
    return a.n == b.n && a.s == b.s && a.d == b.d;
  }
};

/// Spec with the given positions and D = scalars.
InvariantSpaceSpec scalar_spec(std::size_t n, std::uint64_t s);

/// D_max(S): vectors with d_p = d_q for every p < q with (p,q) not in S,
/// as a partition of {0..n-1}.
std::vector<std::vector<std::size_t>> dmax_blocks(std::size_t n, std::uint64_t s);
InvariantSpaceSpec dmax_spec(std::size_t n, std::uint64_t s);

/// Least fixpoint of:
///  R1 (i,j) in S, i < j  =>  (k,l) in S for k <= i, l >= j
///  R2 (i,j) in S, i > j  =>  (p,j) for p < i, (i,q) for q > j (off-diagonal),
///                            and e_i - e_j joins D
///  R3 (i,j) in S, i > j  =>  (j,i) in S
///  R4 d in D, p < q, d_p != d_q  =>  (p,q) in S
/// Under ThreeCase, R2 only adds (i,q) and (p,j) for j < p, q < i.
InvariantSpaceSpec triangular_closure(const InvariantSpaceSpec &spec,
                                      ClosureRules rules = ClosureRules::Full);

/// [V, E_ij] and E_ij V E_ij inside V for all i < j, and V graded by
/// off-diagonal coordinate lines plus diagonal part.
bool is_triangular_invariant(const MatrixSubspace &v);

/// Order by S, then by the echelon rows of D.
bool spec_less(const InvariantSpaceSpec &a, const InvariantSpaceSpec &b);

/// Every closed spec whose D is the vectors constant on the blocks of a
/// coarsening of D_max(S), sorted by spec_less. D_max alone is not enough:
/// span{I, E_12} needs D = scalars while D_max({(1,2)}) is all diagonals.
/// Throws InvalidArgument above max_search_n().
std::vector<InvariantSpaceSpec>
enumerate_invariant_spaces(std::size_t n, ClosureRules rules = ClosureRules::Full);

/// S contains (i+1,i) and (i,i+1) for i = 1..k: the bidiagonal pair inside the
/// realized space has a commutator of rank k+1. Never true for k = 0.
bool staircase_pruned(std::size_t n, std::size_t k, std::uint64_t s);

/// 1 + (t + k)(n - t), for 1 <= t <= n - k.
std::size_t t_bound(std::size_t n, std::size_t k, std::size_t t);

struct SearchReport {
  std::size_t n = 0, k = 0, trials = 0;
  std::uint64_t seed = 0;
  ClosureRules rules = ClosureRules::Full;
  std::size_t max_dim = 0;
  std::size_t bound = 0;
  std::vector<InvariantSpaceSpec> argmax;
  std::size_t enumerated = 0;
  std::size_t pruned = 0;  // certified by the staircase witness
  std::size_t sampled = 0; // rank condition evaluated by sampling
  bool matches_bound() const { return max_dim == bound; }
};

/// Maximum dimension of an enumerated space passing the rank condition at
/// level k. Specs are evaluated in order of decreasing dimension; the first
/// level with a PROBABLE_YES is the maximum, and all of its passing specs
/// are reported. Per-spec seeds are derived from (seed, S), so the result is
/// independent of `jobs`.
SearchReport search_max_dimension(std::size_t n, std::size_t k, std::size_t trials,
                                  std::uint64_t seed,
                                  ClosureRules rules = ClosureRules::Full,
                                  std::size_t jobs = 1);

} // namespace crlab
