#include "crlab/triangularize.hpp"

#include "crlab/error.hpp"
#include "crlab/linalg.hpp"

#include <random>

namespace crlab {

namespace {

/// Raised by the rational pass when no rational eigenvalue is available;
/// carries the characteristic polynomial to adjoin a root of.
struct NeedExtension {
  RationalPolynomial charpoly;
};

template <class F> Matrix<F> first_nonzero_column(const Matrix<F> &c) {
  for (std::size_t j = 0; j < c.cols(); ++j)
    for (std::size_t i = 0; i < c.rows(); ++i)
      if (!is_zero(c(i, j))) {
        Matrix<F> u = c.column_at(j);
        const F inv = F(1) / c(i, j);
        for (std::size_t r = 0; r < u.rows(); ++r)
          u(r, 0) *= inv;
        return u;
      }
  return {};
}

template <class F> struct Classified {
  FamilySide side = FamilySide::Zero;
  Matrix<F> x0;
};

/// Classification of a list of matrices (basis of V or a diagonal block of
/// it; indices in witnesses refer to positions in the list).
template <class F> Classified<F> classify(const std::vector<Matrix<F>> &mats) {
  struct Entry {
    std::size_t i, j;
    Matrix<F> c;
  };
  std::vector<Entry> nonzero;
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      Matrix<F> c = commutator(mats[i], mats[j]);
      if (c.is_zero())
        continue;
      const std::size_t r = rank_by_elimination(c);
      if (r >= 2)
        throw Error(ErrorKind::Inconsistent,
                    "basis pair has a commutator of rank >= 2",
                    BasisPairWitness{i, j, r});
      nonzero.push_back({i, j, std::move(c)});
    }
  if (nonzero.empty())
    return {};
  const Matrix<F> u = first_nonzero_column(nonzero.front().c);
  const Matrix<F> v = first_nonzero_column(nonzero.front().c.transpose());
  const Entry *left_fail = nullptr;
  for (const auto &e : nonzero)
    if (!columns_within(e.c, u)) {
      left_fail = &e;
      break;
    }
  if (!left_fail)
    return {FamilySide::Left, u};
  for (const auto &e : nonzero)
    if (!columns_within(e.c.transpose(), v))
      throw Error(ErrorKind::Inconsistent,
                  "rank-one commutators share neither a column nor a row direction",
                  BasisPairWitness{left_fail->i, left_fail->j, 1});
  return {FamilySide::Right, v};
}

template <class F>
bool invariant_under(const std::vector<Matrix<F>> &mats, const Matrix<F> &u) {
  for (const auto &a : mats)
    if (!columns_within(a * u, u))
      return false;
  return true;
}

/// Eigenvalue access over Q: rational roots of non-scalar basis elements,
/// then of a few small random combinations.
struct RationalOracle {
  std::pair<Mat, Rational> find(const std::vector<Mat> &mats) const {
    const Mat *first_nonscalar = nullptr;
    for (const auto &a : mats) {
      if (a.is_scalar())
        continue;
      if (!first_nonscalar)
        first_nonscalar = &a;
      const auto roots = rational_roots(charpoly(a));
      if (!roots.empty())
        return {a, roots.front()};
    }
    std::mt19937_64 rng(derive_seed(0x747269616e67ull, mats.size()));
    for (int t = 0; t < 16; ++t) {
      Mat c(mats.front().rows(), mats.front().cols());
      for (const auto &a : mats) {
        Mat term = a;
        term *= Rational(random_coefficient(rng, 3));
        c += term;
      }
      if (c.is_scalar())
        continue;
      const auto roots = rational_roots(charpoly(c));
      if (!roots.empty())
        return {c, roots.front()};
    }
    throw NeedExtension{charpoly(*first_nonscalar)};
  }
};

/// Eigenvalue access over Q[t]/(f): test a fixed candidate list (rational
/// eigenvalues of the input, t, and the conjugate root when deg f = 2).
/// A candidate whose test value is a nonzero zero divisor forces a split.
struct ExtensionOracle {
  std::vector<AlgebraicNumber> candidates;

  std::pair<AlgMat, AlgebraicNumber> find(const std::vector<AlgMat> &mats) const {
    for (const auto &a : mats) {
      if (a.is_scalar())
        continue;
      const auto p = characteristic_polynomial(a);
      for (const auto &c : candidates) {
        const AlgebraicNumber value = p(c);
        if (is_zero(value))
          return {a, c};
        (void)value.inverse();
      }
    }
    throw Error(ErrorKind::ExtensionUnsupported,
                "eigenvalue outside the single adjoined extension");
  }
};

template <class F, class Oracle>
Matrix<F> solve(const std::vector<Matrix<F>> &mats, std::size_t n,
                const Oracle &oracle, bool require_commuting) {
  if (n <= 1)
    return Matrix<F>::identity(n);
  // Already upper triangular (in particular all scalar): keep the basis.
  bool upper = true;
  for (const auto &a : mats)
    upper = upper && a.is_upper_triangular();
  if (upper)
    return Matrix<F>::identity(n);

  const Classified<F> cls = classify(mats);
  if (require_commuting && cls.side != FamilySide::Zero)
    throw Error(ErrorKind::NonCommuting, "commuting recursion met a nonzero commutator");

  auto find_left = [&](const std::vector<Matrix<F>> &family) {
    const auto [a, lambda] = oracle.find(family);
    Matrix<F> b0 = a;
    for (std::size_t i = 0; i < n; ++i)
      b0(i, i) -= lambda;
    Matrix<F> m = kernel_matrix(b0);
    if (invariant_under(family, m))
      return m;
    Matrix<F> r = column_space(b0);
    if (invariant_under(family, r))
      return r;
    throw Error(ErrorKind::InvariantFailure,
                "neither the kernel nor the range of A - lambda I is invariant");
  };

  Matrix<F> u;
  if (cls.side == FamilySide::Right) {
    // Invariant for the transposes, then take the annihilator.
    std::vector<Matrix<F>> tr;
    for (const auto &a : mats)
      tr.push_back(a.transpose());
    u = kernel_matrix(find_left(tr).transpose());
  } else {
    u = find_left(mats);
  }

  // Complete u to a basis with standard vectors.
  Matrix<F> p0 = u;
  std::size_t r = rank_by_elimination(p0);
  for (std::size_t j = 0; j < n && p0.cols() < n; ++j) {
    Matrix<F> trial = hconcat(p0, Matrix<F>::unit(n, 1, j, 0));
    const std::size_t tr = rank_by_elimination(trial);
    if (tr > r) {
      p0 = std::move(trial);
      r = tr;
    }
  }
  const std::size_t d = u.cols();
  const Matrix<F> p0_inv = inverse(p0);
  std::vector<Matrix<F>> top, bottom;
  for (const auto &a : mats) {
    const Matrix<F> c = p0_inv * a * p0;
    if (!c.block(d, 0, n - d, d).is_zero())
      throw Error(ErrorKind::InvariantFailure, "invariant subspace check failed");
    top.push_back(c.block(0, 0, d, d));
    bottom.push_back(c.block(d, d, n - d, n - d));
  }
  const Matrix<F> p1 = solve(top, d, oracle, require_commuting);
  const Matrix<F> p2 = solve(bottom, n - d, oracle, require_commuting);
  return p0 * direct_sum(p1, p2);
}

AlgMat lift(const Mat &m, const ExtensionPtr &field) {
  return m.map<AlgebraicNumber>([&](const Rational &q) {
    return AlgebraicNumber(field, std::vector<Rational>{q});
  });
}

TriangularizationResult finish_rational(const MatrixSubspace &v, Mat p) {
  TriangularizationResult res;
  res.n = v.ambient();
  const Mat p_inv = inverse(p);
  for (const auto &a : v.basis()) {
    const Mat c = p_inv * a * p;
    if (!c.is_upper_triangular())
      throw Error(ErrorKind::InvariantFailure, "assembled basis does not triangularize");
    res.certificate.push_back(c.strictly_lower());
  }
  res.change_of_basis = std::move(p);
  for (std::size_t i = 1; i <= res.n; ++i)
    res.chain_dims.push_back(i);
  return res;
}

TriangularizationResult finish_extended(const MatrixSubspace &v, AlgMat p,
                                        const ExtensionPtr &field) {
  TriangularizationResult res;
  res.n = v.ambient();
  const AlgMat p_inv = inverse(p);
  for (const auto &a : v.basis()) {
    const AlgMat c = p_inv * lift(a, field) * p;
    if (!c.is_upper_triangular())
      throw Error(ErrorKind::InvariantFailure, "assembled basis does not triangularize");
    res.extended_certificate.push_back(c.strictly_lower());
  }
  bool rational = true;
  for (const auto &x : p.entries())
    rational = rational && x.is_rational();
  if (rational) {
    Mat q = p.map<Rational>([](const AlgebraicNumber &x) { return x.rational_value(); });
    return finish_rational(v, std::move(q));
  }
  res.extension_modulus = field->modulus;
  res.extended_change_of_basis = std::move(p);
  for (std::size_t i = 1; i <= res.n; ++i)
    res.chain_dims.push_back(i);
  return res;
}

TriangularizationResult run(const MatrixSubspace &v, bool require_commuting) {
  const std::size_t n = v.ambient();
  const auto basis = v.basis();
  try {
    return finish_rational(v, solve(basis, n, RationalOracle{}, require_commuting));
  } catch (const NeedExtension &need) {
    RationalPolynomial f = squarefree_part(need.charpoly);
    for (;;) {
      auto field = std::make_shared<const ExtensionField>(f);
      try {
        ExtensionOracle oracle;
        for (const auto &a : basis)
          for (const auto &q : rational_roots(charpoly(a)))
            oracle.candidates.emplace_back(field, std::vector<Rational>{q});
        const auto theta = AlgebraicNumber::generator(field);
        oracle.candidates.push_back(theta);
        if (f.degree() == 2)
          oracle.candidates.push_back(AlgebraicNumber(field, {-f.coeff(1)}) - theta);
        std::vector<AlgMat> lifted;
        for (const auto &a : basis)
          lifted.push_back(lift(a, field));
        return finish_extended(v, solve(lifted, n, oracle, require_commuting), field);
      } catch (const ExtensionSplit &split) {
        f = split.factor;
      }
    }
  }
}

} // namespace

std::string to_string(FamilySide s) {
  switch (s) {
  case FamilySide::Left:
    return "LEFT";
  case FamilySide::Right:
    return "RIGHT";
  case FamilySide::Zero:
    return "ZERO";
  }
  return "?";
}

RankOneFamily classify_rank_one_family(const MatrixSubspace &v) {
  const auto c = classify(v.basis());
  return {c.side, c.x0};
}

TriangularizationResult triangularize_commuting(const MatrixSubspace &v) {
  const auto basis = v.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Mat c = commutator(basis[i], basis[j]);
      if (!c.is_zero())
        throw Error(ErrorKind::NonCommuting, "basis elements do not commute",
                    BasisPairWitness{i, j, rank(c)});
    }
  return run(v, true);
}

TriangularizationResult triangularize_rank_one(const MatrixSubspace &v) {
  return run(v, false);
}

bool verify_triangular(const MatrixSubspace &v, const Mat &p) {
  const Mat p_inv = inverse(p);
  for (const auto &a : v.basis())
    if (!(p_inv * a * p).is_upper_triangular())
      return false;
  return true;
}

bool verify_triangular(const MatrixSubspace &v, const AlgMat &p) {
  const AlgMat p_inv = inverse(p);
  ExtensionPtr field;
  for (const auto &x : p.entries())
    if (x.field())
      field = x.field();
  for (const auto &a : v.basis())
    if (!(p_inv * lift(a, field) * p).is_upper_triangular())
      return false;
  return true;
}

} // namespace crlab
