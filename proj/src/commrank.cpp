#include "crlab/commrank.hpp"

#include "crlab/error.hpp"

namespace crlab {

namespace {

std::vector<long> draw_coefficients(std::size_t count, std::mt19937_64 &rng,
                                    long bound) {
  std::vector<long> c(count);
  for (auto &x : c)
    x = random_coefficient(rng, bound);
  return c;
}

template <class F>
Matrix<F> combine(const std::vector<Matrix<F>> &basis, std::size_t n,
                  const std::vector<long> &coeffs) {
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0) {
      Matrix<F> term = basis[i];
      term *= F(coeffs[i]);
      m += term;
    }
  return m;
}

struct Trial {
  std::vector<long> a, b;
};

Trial draw_trial(std::size_t dim, std::uint64_t seed, std::size_t t, long bound) {
  std::mt19937_64 rng(derive_seed(seed, t));
  Trial tr;
  tr.a = draw_coefficients(dim, rng, bound);
  tr.b = draw_coefficients(dim, rng, bound);
  return tr;
}

} // namespace

Mat random_member(const MatrixSubspace &v, std::mt19937_64 &rng,
                  long coefficient_bound) {
  std::vector<Rational> c(v.dim());
  for (auto &x : c)
    x = random_coefficient(rng, coefficient_bound);
  return v.combination(c);
}

CommutatorProfile max_commutator_rank(const MatrixSubspace &v,
                                      std::size_t trials, std::uint64_t seed,
                                      long coefficient_bound) {
  if (trials == 0)
    throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  const std::size_t n = v.ambient();
  const auto basis = v.basis();

  // Screen mod p when every basis denominator is a unit mod p.
  std::optional<std::vector<ModMat>> basis_p;
  try {
    std::vector<ModMat> bp;
    for (const auto &b : basis)
      bp.push_back(to_modp(b));
    basis_p = std::move(bp);
  } catch (const Error &) {
  }

  std::size_t best = 0, best_trial = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Trial tr = draw_trial(basis.size(), seed, t, coefficient_bound);
    std::size_t r;
    if (basis_p) {
      r = rank(commutator(combine(*basis_p, n, tr.a), combine(*basis_p, n, tr.b)));
    } else {
      r = rank(commutator(combine(basis, n, tr.a), combine(basis, n, tr.b)));
    }
    if (r > best || t == 0) {
      best = r;
      best_trial = t;
    }
  }

  const Trial win = draw_trial(basis.size(), seed, best_trial, coefficient_bound);
  CommutatorProfile prof;
  prof.n = n;
  prof.witness_a = combine(basis, n, win.a);
  prof.witness_b = combine(basis, n, win.b);
  prof.certified_lower = rank(commutator(prof.witness_a, prof.witness_b));
  // A mod-p rank never exceeds the rational one.
  prof.probable_max = std::max(best, prof.certified_lower);
  prof.witness_trial = best_trial;
  prof.trials = trials;
  prof.seed = seed;
  return prof;
}

std::string to_string(RankVerdict v) {
  return v == RankVerdict::CertifiedNo ? "CERTIFIED_NO" : "PROBABLE_YES";
}

RankConditionResult satisfies_rank_condition(const MatrixSubspace &v,
                                             std::size_t k, std::size_t trials,
                                             std::uint64_t seed) {
  if (k >= v.ambient())
    throw Error(ErrorKind::InvalidArgument, "rank level k must be < n");
  RankConditionResult res;
  res.k = k;
  res.profile = max_commutator_rank(v, trials, seed);
  res.verdict = res.profile.certified_lower > k ? RankVerdict::CertifiedNo
                                                : RankVerdict::ProbableYes;
  return res;
}

BasisPairSweep basis_pair_sweep(const MatrixSubspace &v) {
  BasisPairSweep out;
  const auto basis = v.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const std::size_t r = rank(commutator(basis[i], basis[j]));
      if (r > out.max_rank)
        out = {r, i, j};
    }
  return out;
}

std::size_t dimension_bound(std::size_t n, std::size_t k) {
  if (k >= n)
    throw Error(ErrorKind::InvalidArgument, "dimension_bound requires k < n");
  return n * k + (n - k) * (n - k) / 4 + 1;
}

std::string to_string(BoundStatus s) {
  switch (s) {
  case BoundStatus::Pass:
    return "PASS";
  case BoundStatus::Fail:
    return "FAIL";
  case BoundStatus::NotApplicable:
    return "NOT_APPLICABLE";
  }
  return "?";
}

BoundReport check_dimension_bound(const MatrixSubspace &v, std::size_t trials,
                                  std::uint64_t seed) {
  BoundReport rep;
  rep.dim = v.dim();
  rep.profile = max_commutator_rank(v, trials, seed);
  const std::size_t n = rep.profile.n;
  rep.k_hat = rep.profile.probable_max;
  if (rep.dim == 0) {
    rep.status = BoundStatus::Pass;
    if (n > 0) {
      rep.bound = dimension_bound(n, 0);
      rep.slack = static_cast<long>(*rep.bound);
    }
    return rep;
  }
  if (rep.k_hat >= n) {
    rep.status = BoundStatus::NotApplicable;
    rep.interpretation = "invertible commutator: condition (A) fails for every k < n";
    return rep;
  }
  rep.bound = dimension_bound(n, rep.k_hat);
  rep.slack = static_cast<long>(*rep.bound) - static_cast<long>(rep.dim);
  if (rep.slack >= 0) {
    rep.status = BoundStatus::Pass;
  } else {
    rep.status = BoundStatus::Fail;
    rep.interpretation = rep.profile.certified_lower == rep.k_hat
                             ? "k-hat certified from below only: undersampled rank "
                               "or genuine counterexample"
                             : "probable-rank artifact";
  }
  return rep;
}

} // namespace crlab
