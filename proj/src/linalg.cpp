#include "crlab/linalg.hpp"

#include "crlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <set>

namespace crlab {

namespace {

/// Row-wise scaling of a rational matrix to an integer matrix.
std::vector<std::vector<BigInt>> integer_rows(const Mat &m) {
  std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return a;
}

/// Fraction-free (Bareiss) forward elimination in place. Returns the rank;
/// `swaps` counts row exchanges.
std::size_t bareiss(std::vector<std::vector<BigInt>> &a, std::size_t cols,
                    std::size_t &swaps) {
  const std::size_t rows = a.size();
  BigInt prev = 1;
  std::size_t r = 0;
  swaps = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Positive divisors of |v|, v < 2^63.
std::vector<BigInt> divisors(const BigInt &v) {
  const BigInt magnitude = abs(v);
  const unsigned long long x = magnitude.get_ui();
  std::vector<BigInt> ds;
  for (unsigned long long d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      ds.emplace_back(static_cast<unsigned long>(d));
      if (d * d != x)
        ds.emplace_back(static_cast<unsigned long>(x / d));
    }
  }
  return ds;
}

/// Primitive integer polynomial with the same roots.
std::vector<BigInt> primitive_integer_coeffs(const RationalPolynomial &p) {
  BigInt l = 1;
  for (const auto &c : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> z;
  for (const auto &c : p.coeffs())
    z.push_back(c.get_num() * (l / c.get_den()));
  BigInt g = 0;
  for (const auto &c : z)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0)
    for (auto &c : z)
      c /= g;
  return z;
}

/// Durand-Kerner on a squarefree polynomial; approximate complex roots.
std::vector<std::complex<long double>>
approximate_roots(const RationalPolynomial &p) {
  using C = std::complex<long double>;
  const auto monic = p.monic();
  const auto n = static_cast<std::size_t>(monic.degree());
  std::vector<C> a(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    a[i] = C(static_cast<long double>(monic.coeffs()[i].get_d()), 0);
  auto eval = [&](C x) {
    C acc = 0;
    for (std::size_t i = n + 1; i-- > 0;)
      acc = acc * x + a[i];
    return acc;
  };
  long double radius = 1;
  for (std::size_t i = 0; i < n; ++i)
    radius = std::max(radius, 1 + std::abs(a[i]));
  std::vector<C> z(n);
  for (std::size_t i = 0; i < n; ++i)
    z[i] = std::polar(radius, 0.4L + 2 * 3.14159265358979323846L *
                                         static_cast<long double>(i) /
                                         static_cast<long double>(n));
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      C denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i)
          denom *= z[i] - z[j];
      if (std::abs(denom) == 0)
        denom = C(1e-30L, 0);
      const C step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L)
      break;
  }
  return z;
}

/// Continued-fraction convergents of x with denominators up to `max_den`.
std::vector<Rational> convergents(long double x, long max_den) {
  std::vector<Rational> out;
  BigInt h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  long double rest = x;
  for (int i = 0; i < 40; ++i) {
    const long double fl = std::floor(rest);
    if (std::fabs(fl) > 1e18L)
      break;
    const BigInt ai(static_cast<long>(fl));
    const BigInt h2 = ai * h0 + h1, k2 = ai * k0 + k1;
    if (k2 > max_den)
      break;
    out.emplace_back(h2, k2);
    out.back().canonicalize();
    h1 = h0;
    h0 = h2;
    k1 = k0;
    k0 = k2;
    const long double frac = rest - fl;
    if (frac < 1e-15L)
      break;
    rest = 1 / frac;
  }
  return out;
}

} // namespace

std::size_t rank(const Mat &m) {
  auto a = integer_rows(m);
  std::size_t swaps = 0;
  return bareiss(a, m.cols(), swaps);
}

std::size_t rank(const ModMat &m) { return rank_by_elimination(m); }

Rational determinant(const Mat &m) {
  if (!m.is_square())
    throw Error(ErrorKind::SizeMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  // Undo the per-row integer scaling afterwards.
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= Rational(l);
  }
  auto a = integer_rows(m);
  std::size_t swaps = 0;
  if (bareiss(a, n, swaps) < n)
    return 0;
  Rational det(a[n - 1][n - 1]);
  if (swaps % 2 == 1)
    det = -det;
  return det / scale;
}

std::vector<Mat> kernel_basis(const Mat &m) {
  const Mat k = kernel_matrix(m);
  std::vector<Mat> out;
  for (std::size_t j = 0; j < k.cols(); ++j)
    out.push_back(k.column_at(j));
  return out;
}

ModMat to_modp(const Mat &m) {
  return m.map<ModP>([](const Rational &q) { return ModP::from_rational(q); });
}

RationalPolynomial charpoly(const Mat &m) {
  return characteristic_polynomial(m);
}

Rational resultant(const RationalPolynomial &p, const RationalPolynomial &q) {
  if (p.is_zero() || q.is_zero())
    return 0;
  const auto dp = static_cast<std::size_t>(p.degree());
  const auto dq = static_cast<std::size_t>(q.degree());
  if (dp == 0 && dq == 0)
    return 1;
  const std::size_t n = dp + dq;
  Mat s(n, n);
  // Rows: dq shifted copies of p, then dp shifted copies of q; coefficients
  // from highest to lowest.
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t i = 0; i <= dp; ++i)
      s(r, r + i) = p.coeffs()[dp - i];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t i = 0; i <= dq; ++i)
      s(dq + r, r + i) = q.coeffs()[dq - i];
  return determinant(s);
}

Rational discriminant(const RationalPolynomial &p) {
  const long d = p.degree();
  if (d <= 1)
    return 1;
  Rational r = resultant(p, p.derivative()) / p.lead();
  if ((d * (d - 1) / 2) % 2 == 1)
    r = -r;
  return r;
}

Rational charpoly_discriminant(const Mat &m) {
  if (!m.is_square())
    throw Error(ErrorKind::SizeMismatch, "discriminant of non-square matrix");
  return discriminant(charpoly(m));
}

std::vector<Rational> rational_roots(const RationalPolynomial &p) {
  if (p.degree() < 1)
    return {};
  std::set<Rational> roots;
  RationalPolynomial sf = squarefree_part(p);
  if (is_zero(sf.coeff(0))) {
    roots.insert(Rational(0));
    sf = divmod(sf, RationalPolynomial::variable()).first;
  }
  if (sf.degree() >= 1) {
    const auto z = primitive_integer_coeffs(sf);
    const BigInt a0 = abs(z.front()), an = abs(z.back());
    const BigInt limit = BigInt(1) << 40;
    std::vector<Rational> candidates;
    if (a0 <= limit && an <= limit) {
      // Rational root theorem: root = u/v with u | a0, v | an.
      for (const auto &u : divisors(a0))
        for (const auto &v : divisors(an)) {
          candidates.emplace_back(u, v);
          candidates.emplace_back(-u, v);
        }
    } else {
      for (const auto &r : approximate_roots(sf)) {
        if (std::fabs(r.imag()) > 1e-6L * (1 + std::fabs(r.real())))
          continue;
        for (auto &c : convergents(r.real(), 1000000))
          candidates.push_back(c);
      }
    }
    for (auto &c : candidates) {
      c.canonicalize();
      if (is_zero(sf(c)))
        roots.insert(c);
    }
  }
  return {roots.begin(), roots.end()};
}

long random_coefficient(std::mt19937_64 &rng, long bound) {
  if (bound <= 0)
    return 0;
  std::uniform_int_distribution<long> dist(-bound, bound);
  return dist(rng);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Mat random_matrix(std::size_t rows, std::size_t cols, long bound,
                  std::mt19937_64 &rng) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = random_coefficient(rng, bound);
  return m;
}

Mat random_matrix(std::size_t rows, std::size_t cols, long bound,
                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_matrix(rows, cols, bound, rng);
}

Mat random_invertible(std::size_t n, long bound, std::mt19937_64 &rng) {
  Mat lower = Mat::identity(n), upper = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j)
        lower(i, j) = random_coefficient(rng, bound);
      else if (i < j)
        upper(i, j) = random_coefficient(rng, bound);
    }
  Mat q = lower * upper;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = q(perm[i], j);
  return out;
}

} // namespace crlab
