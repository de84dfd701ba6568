#include "crlab/verify.hpp"

#include "crlab/error.hpp"
#include "crlab/linalg.hpp"

#include <algorithm>
#include <random>

namespace crlab {

namespace {

constexpr long kSmallCoefficients = 50;

/// Extends the columns of `u` (independent) to a basis with unit vectors.
Mat complete_basis(const Mat &u, std::size_t n) {
  Mat p = u.cols() == 0 ? Mat(n, 0) : u;
  std::size_t r = p.cols();
  for (std::size_t j = 0; j < n && p.cols() < n; ++j) {
    Mat trial = hconcat(p, Mat::unit(n, 1, j, 0));
    if (const std::size_t tr = rank(trial); tr > r) {
      p = std::move(trial);
      r = tr;
    }
  }
  return p;
}

Mat reduce_columns(const Mat &m) {
  return m.cols() == 0 ? m : column_space(m);
}

/// Smallest subspace containing the columns of u and invariant under every
/// matrix of the list.
Mat invariant_closure(const std::vector<Mat> &mats, Mat u) {
  u = reduce_columns(u);
  for (;;) {
    Mat grown = u;
    for (const auto &a : mats)
      if (u.cols() > 0)
        grown = hconcat(grown, a * u);
    grown = reduce_columns(grown);
    if (grown.cols() == u.cols())
      return u;
    u = std::move(grown);
  }
}

/// Coordinates of the columns of `m` in the basis `basis` (full column
/// rank; columns of m assumed inside its span).
Mat coordinates_in(const Mat &basis, const Mat &m) {
  const Mat bt = basis.transpose();
  return inverse(bt * basis) * bt * m;
}

/// Candidate elements of a small commutative space: the basis, then a few
/// seeded combinations.
std::vector<Mat> candidates(const std::vector<Mat> &mats, std::uint64_t seed) {
  std::vector<Mat> out = mats;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 12; ++t) {
    Mat x(mats.front().rows(), mats.front().cols());
    for (const auto &a : mats) {
      Mat term = a;
      term *= Rational(random_coefficient(rng, 7));
      x += term;
    }
    out.push_back(std::move(x));
  }
  return out;
}

Mat traceless(const Mat &a) {
  const std::size_t c = a.rows();
  Mat n = a;
  const Rational shift = a.trace() / Rational(static_cast<long>(c));
  for (std::size_t i = 0; i < c; ++i)
    n(i, i) -= shift;
  return n;
}

Mat minus_scalar(const Mat &a, const Rational &lambda) {
  Mat b = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    b(i, i) -= lambda;
  return b;
}

/// A change of basis Q of the corner with Q^{-1} C Q inside the variant's
/// corner (equality is left to the caller's exact comparison).
std::optional<Mat> match_corner(const std::vector<Mat> &corner, CornerVariant variant,
                                std::uint64_t seed) {
  const std::size_t c = corner.front().rows();
  if (c != corner_size(variant))
    return std::nullopt;
  switch (variant) {
  case CornerVariant::Scalar:
    return Mat::identity(1);
  case CornerVariant::Diag2:
  case CornerVariant::Diag3:
    for (const auto &x : candidates(corner, seed)) {
      const auto roots = rational_roots(charpoly(x));
      if (roots.size() != c)
        continue;
      Mat q(c, 0);
      for (const auto &lambda : roots)
        q = hconcat(q, kernel_matrix(minus_scalar(x, lambda)));
      return q;
    }
    return std::nullopt;
  case CornerVariant::NilRank2:
    for (const auto &a : corner) {
      const Mat n = traceless(a);
      const Mat n2 = n * n;
      if (n2.is_zero() || !(n2 * n).is_zero())
        continue;
      for (std::size_t j = 0; j < c; ++j) {
        const Mat v = Mat::unit(c, 1, j, 0);
        if (!(n2 * v).is_zero())
          return hconcat(hconcat(n2 * v, n * v), v);
      }
    }
    return std::nullopt;
  case CornerVariant::NilRank1PlusC:
    for (const auto &x : candidates(corner, seed)) {
      const auto roots = rational_roots(charpoly(x));
      if (roots.size() != 2)
        continue;
      for (std::size_t pick = 0; pick < 2; ++pick) {
        const Rational &lambda = roots[pick], &mu = roots[1 - pick];
        const Mat b = minus_scalar(x, lambda);
        const Mat g = kernel_matrix(b * b), h = kernel_matrix(minus_scalar(x, mu));
        if (g.cols() != 2 || h.cols() != 1)
          continue;
        // A non-scalar restriction to the 2-dimensional eigenspace supplies
        // the rank-one nilpotent.
        for (const auto &a : corner) {
          const Mat n = traceless(coordinates_in(g, a * g));
          if (n.is_zero())
            continue;
          const Mat w = Mat::unit(2, 1, (n * Mat::unit(2, 1, 0, 0)).is_zero() ? 1 : 0, 0);
          return hconcat(hconcat(g * (n * w), g * w), h);
        }
      }
    }
    return std::nullopt;
  case CornerVariant::Generic:
    return std::nullopt;
  }
  return std::nullopt;
}

struct Attempt {
  bool ok = false;
  bool exceptional = false;
  CornerVariant variant = CornerVariant::Generic;
  std::optional<std::size_t> l;
  Mat u1, u2;
  Mat p; // p^{-1} W p is the canonical space
  std::string diagnostics;
};

Attempt attempt(const MatrixSubspace &w, std::size_t k, std::uint64_t seed) {
  Attempt out;
  const std::size_t n = w.ambient();
  const std::size_t c = n - k;
  const auto basis = w.basis();

  Mat cols(n, 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Mat cm = commutator(basis[i], basis[j]);
      if (!cm.is_zero())
        cols = reduce_columns(hconcat(cols, cm));
    }
  out.u1 = invariant_closure(basis, cols);
  if (out.u1.cols() != k) {
    out.diagnostics = "dim U1 = " + std::to_string(out.u1.cols()) + ", expected " +
                      std::to_string(k);
    return out;
  }

  const Mat p0 = complete_basis(out.u1, n);
  const Mat p0_inv = inverse(p0);
  std::vector<Mat> corner;
  for (const auto &a : basis) {
    const Mat b = p0_inv * a * p0;
    corner.push_back(b.block(k, k, c, c));
  }
  auto lift = [&](const Mat &q) {
    return p0 * direct_sum(Mat::identity(k), q);
  };
  auto lands_on = [&](const Mat &p, const MatrixSubspace &target) {
    return conjugate(w, inverse(p)) == target;
  };

  // Generic corner: traceless parts are the Schur nilpotents, their common
  // image is U2 / U1.
  Mat image(c, 0);
  for (const auto &a : corner)
    image = reduce_columns(hconcat(image, traceless(a)));
  const std::size_t l = image.cols();
  {
    Mat up(n, l);
    up.set_block(k, 0, image);
    out.u2 = hconcat(out.u1, p0 * up);
  }
  const auto splits = valid_splits(n, k);
  if (std::find(splits.begin(), splits.end(), l) != splits.end()) {
    const Mat p = lift(complete_basis(image, c));
    if (lands_on(p, v_k(n, k, l))) {
      out.ok = true;
      out.l = l;
      out.p = p;
      return out;
    }
    out.diagnostics = "chain found (l = " + std::to_string(l) +
                      ") but the conjugated space differs from v_k";
  } else {
    out.diagnostics = "dim U2/U1 = " + std::to_string(l) + " is not a valid split";
  }

  if (c <= 3) {
    for (auto variant : {CornerVariant::Diag3, CornerVariant::NilRank1PlusC,
                         CornerVariant::NilRank2, CornerVariant::Diag2,
                         CornerVariant::Scalar}) {
      const auto q = match_corner(corner, variant, seed);
      if (!q || rank(*q) != c)
        continue;
      const Mat p = lift(*q);
      if (lands_on(p, exceptional_space(n, k, variant))) {
        out.ok = true;
        out.exceptional = true;
        out.variant = variant;
        out.p = p;
        return out;
      }
    }
    out.diagnostics += "; no exceptional corner matched";
  }
  return out;
}

} // namespace

std::optional<Mat> find_distinct_eigenvalue_element(const MatrixSubspace &v,
                                                    std::size_t trials,
                                                    std::uint64_t seed) {
  if (v.dim() == 0 || !v.is_square())
    return std::nullopt;
  for (const auto &a : v.basis())
    if (!is_zero(charpoly_discriminant(a)))
      return a;
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(seed, t));
    Mat a = random_member(v, rng, kSmallCoefficients);
    if (!is_zero(charpoly_discriminant(a)))
      return a;
  }
  return std::nullopt;
}

FlandersReport flanders_check(const MatrixSubspace &v, std::size_t trials,
                              std::uint64_t seed) {
  FlandersReport rep;
  rep.rows = v.rows();
  rep.cols = v.cols();
  rep.dim = v.dim();
  rep.trials = trials;
  rep.seed = seed;
  const std::size_t cap = std::min(rep.rows, rep.cols);
  if (rep.dim > 0)
    for (std::size_t t = 0; t < trials && rep.k_hat < cap; ++t) {
      std::mt19937_64 rng(derive_seed(seed, t));
      rep.k_hat = std::max(rep.k_hat, rank(random_member(v, rng)));
    }
  rep.bound = rep.k_hat * std::max(rep.rows, rep.cols);
  rep.slack = static_cast<long>(rep.bound) - static_cast<long>(rep.dim);
  rep.status = rep.slack >= 0 ? BoundStatus::Pass : BoundStatus::Fail;
  return rep;
}

std::string to_string(StructureStatus s) {
  switch (s) {
  case StructureStatus::MatchesVk:
    return "MATCHES_VK";
  case StructureStatus::MatchesVkTranspose:
    return "MATCHES_VK_TRANSPOSE";
  case StructureStatus::Exceptional:
    return "EXCEPTIONAL";
  case StructureStatus::NoMatch:
    return "NO_MATCH";
  case StructureStatus::NotEqualityCase:
    return "NOT_EQUALITY_CASE";
  }
  return "?";
}

StructureVerdict structure_check(const MatrixSubspace &v, std::size_t trials,
                                 std::uint64_t seed) {
  StructureVerdict out;
  out.trials = trials;
  out.seed = seed;
  out.dim = v.dim();
  if (!v.is_square()) {
    out.diagnostics = "rectangular space";
    return out;
  }
  out.n = v.ambient();
  const auto profile = max_commutator_rank(v, trials, seed);
  out.k_hat = profile.probable_max;
  if (out.k_hat >= out.n) {
    out.status = StructureStatus::NotEqualityCase;
    out.diagnostics = "commutator rank reaches n; no bound applies";
    return out;
  }
  out.bound = dimension_bound(out.n, out.k_hat);
  if (out.dim != *out.bound) {
    out.status = StructureStatus::NotEqualityCase;
    out.diagnostics = "dim " + std::to_string(out.dim) + " != bound " +
                      std::to_string(*out.bound);
    return out;
  }

  auto accept = [&](const Attempt &a, bool transposed) {
    out.u1 = a.u1;
    out.u2 = a.u2;
    out.chain_dims = {a.u1.cols(), a.u2.cols()};
    out.l = a.l;
    out.transposed = transposed;
    if (a.exceptional) {
      out.status = StructureStatus::Exceptional;
      out.tag = to_string(a.variant);
    } else {
      out.status = transposed ? StructureStatus::MatchesVkTranspose
                              : StructureStatus::MatchesVk;
    }
    // conjugate(V, W) = W V W^{-1}. Direct: W = p^{-1}. Transposed: p^{-1}
    // V^T p = T gives p^T V p^{-T} = T^T, so W = p^T.
    out.witness = transposed ? a.p.transpose() : inverse(a.p);
  };

  const Attempt direct = attempt(v, out.k_hat, seed);
  if (direct.ok) {
    accept(direct, false);
    return out;
  }
  const Attempt tr = attempt(transpose_space(v), out.k_hat, seed);
  if (tr.ok) {
    accept(tr, true);
    return out;
  }
  out.status = StructureStatus::NoMatch;
  out.u1 = direct.u1;
  out.u2 = direct.u2;
  out.chain_dims = {direct.u1.cols(), direct.u2.cols()};
  out.diagnostics = "V: " + direct.diagnostics + "; V^T: " + tr.diagnostics;
  return out;
}

std::string to_string(ReportStatus s) {
  switch (s) {
  case ReportStatus::Pass:
    return "PASS";
  case ReportStatus::Fail:
    return "FAIL";
  case ReportStatus::NotCovered:
    return "NOT_COVERED";
  }
  return "?";
}

AlgebraStructureReport algebra_structure_report(const MatrixSubspace &v,
                                                std::size_t trials,
                                                std::uint64_t seed) {
  AlgebraStructureReport rep;
  rep.dim = v.dim();
  rep.is_algebra = v.is_square() && is_algebra(v);
  rep.structure = structure_check(v, trials, seed);
  rep.bound = rep.structure.bound;
  rep.equality = rep.bound && rep.dim == *rep.bound;
  if (!rep.is_algebra || !rep.equality)
    rep.status = ReportStatus::NotCovered;
  else
    rep.status = rep.structure.matched() ? ReportStatus::Pass : ReportStatus::Fail;
  return rep;
}

} // namespace crlab
