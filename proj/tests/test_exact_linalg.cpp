#include "crlab/algebraic.hpp"
#include "crlab/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace crlab;

namespace {

Mat diag(std::initializer_list<long> d) {
  std::vector<Rational> v;
  for (long x : d)
    v.emplace_back(x);
  return Mat::diagonal(v);
}

// Laplace expansion; independent of elimination.
Rational cofactor_det(const Mat &m) {
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  if (n == 1)
    return m(0, 0);
  Rational acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Mat minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j)
          minor(r - 1, cc++) = m(r, c);
    const Rational term = m(0, j) * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : Rational(-term);
  }
  return acc;
}

Mat random_upper_unimodular(std::size_t n, std::mt19937_64 &rng) {
  Mat u = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      u(i, j) = random_coefficient(rng, 5);
  if (rng() % 2)
    u(0, 0) = -1;
  return u;
}

} // namespace

TEST_CASE("rank examples") {
  CHECK(rank(Mat::zero(3, 3)) == 0);
  CHECK(rank(Mat::unit(2, 0, 0) - Mat::unit(2, 1, 1)) == 2);
  CHECK(rank(diag({-1, -1, 2, 0})) == 3);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Mat::identity(3)).empty());

  const auto k12 = kernel_basis(Mat::unit(2, 0, 1));
  REQUIRE(k12.size() == 1);
  CHECK(k12[0] == Mat::column({Rational(1), Rational(0)}));

  const auto kd = kernel_basis(diag({1, 0, 2}));
  REQUIRE(kd.size() == 1);
  CHECK(kd[0] == Mat::column({Rational(0), Rational(1), Rational(0)}));
}

TEST_CASE("kernel dimension and annihilation on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    // Force rank deficiency by multiplying thin factors.
    const std::size_t inner = 1 + rng() % std::min(r, c);
    const Mat m = random_matrix(r, inner, 4, rng) * random_matrix(inner, c, 4, rng);
    const auto ker = kernel_basis(m);
    CHECK(ker.size() == c - rank(m));
    for (const auto &v : ker)
      CHECK((m * v).is_zero());
  }
}

TEST_CASE("commutator examples") {
  const Mat e12 = Mat::unit(2, 0, 1), e21 = Mat::unit(2, 1, 0);
  CHECK(commutator(e12, e12).is_zero());
  CHECK(commutator(e12, e21) == Mat::unit(2, 0, 0) - Mat::unit(2, 1, 1));
  CHECK_THROWS_AS(commutator(Mat::identity(2), Mat::identity(3)), Error);
}

TEST_CASE("charpoly discriminant examples") {
  CHECK(charpoly_discriminant(diag({1, 2})) == 1);
  CHECK(charpoly_discriminant(Mat::identity(2)) == 0);
  CHECK(charpoly_discriminant(Mat::unit(2, 0, 1)) == 0);
}

TEST_CASE("discriminant equals product of squared eigenvalue gaps") {
  // Triangular integer matrices have their diagonal as spectrum, so
  // prod_{i<j} (d_i - d_j)^2 is an independent oracle.
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 5;
    Mat m = random_matrix(n, n, 3, rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        m(i, j) = 0;
    Rational expected = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational gap = m(i, i) - m(j, j);
        expected *= gap * gap;
      }
    CHECK(charpoly_discriminant(m) == expected);
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 5;
    Mat m = random_matrix(n, n, 6, rng);
    if (t % 3 == 0) {
      m(0, 0) = Rational(rng() % 7, 1 + rng() % 5);
      m(0, 0).canonicalize();
    }
    CHECK(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("random_matrix determinism") {
  CHECK(random_matrix(2, 2, 0, 99).is_zero());
  CHECK(random_matrix(3, 3, 10, 42) == random_matrix(3, 3, 10, 42));
  CHECK_FALSE(random_matrix(3, 3, 10, 42) == random_matrix(3, 3, 10, 43));
  const Mat m = random_matrix(6, 6, 10, 7);
  for (const auto &x : m.entries())
    CHECK(abs(x) <= 10);
}

TEST_CASE("rank is transpose invariant and equivalence invariant") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const std::size_t inner = 1 + rng() % std::min(r, c);
    const Mat m = random_matrix(r, inner, 3, rng) * random_matrix(inner, c, 3, rng);
    CHECK(rank(m) == rank(m.transpose()));
    const Mat p = random_upper_unimodular(r, rng).transpose() *
                  random_upper_unimodular(r, rng);
    const Mat q = random_upper_unimodular(c, rng) *
                  random_upper_unimodular(c, rng).transpose();
    CHECK(rank(p * m * q) == rank(m));
  }
}

TEST_CASE("commutator is antisymmetric and traceless") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const Mat a = random_matrix(n, n, 9, rng), b = random_matrix(n, n, 9, rng);
    CHECK(commutator(a, b) == -commutator(b, a));
    CHECK(commutator(a, b).trace() == 0);
  }
}

TEST_CASE("rational rank equals screening rank on random integer matrices") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const std::size_t inner = 1 + rng() % 6;
    const Mat m = random_matrix(r, inner, 20, rng) * random_matrix(inner, c, 20, rng);
    CHECK(rank(m) == rank(to_modp(m)));
  }
}

TEST_CASE("nonzero discriminant implies a cyclic vector") {
  std::mt19937_64 rng(31);
  int seen = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 4;
    const Mat m = random_matrix(n, n, 3, rng);
    if (charpoly_discriminant(m) == 0)
      continue;
    ++seen;
    // Krylov matrix [v, Mv, ..., M^{n-1}v] of a random vector.
    const Mat v = random_matrix(n, 1, 50, rng);
    Mat krylov(n, n), w = v;
    for (std::size_t j = 0; j < n; ++j) {
      krylov.set_block(0, j, w);
      w = m * w;
    }
    CHECK(rank(krylov) == n);
  }
  CHECK(seen > 20);
}

TEST_CASE("rational roots") {
  // (x - 2)^2 (x + 1/3) (x^2 - 2)
  const auto p = RationalPolynomial::linear_root(2) *
                 RationalPolynomial::linear_root(2) *
                 RationalPolynomial::linear_root(Rational(-1, 3)) *
                 RationalPolynomial({Rational(-2), Rational(0), Rational(1)});
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(-1, 3));
  CHECK(roots[1] == 2);
  CHECK(rational_roots(RationalPolynomial({Rational(1), Rational(0), Rational(1)})).empty());
  CHECK(rational_roots(RationalPolynomial::variable() * RationalPolynomial::variable()) ==
        std::vector<Rational>{Rational(0)});
}

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("3/-4"), Error);
}

TEST_CASE("screening prime") {
  CHECK(screening_prime() > (1ull << 30));
  CHECK(is_prime_u64(kDefaultScreeningPrime));
  CHECK_FALSE(is_prime_u64((1ull << 61) + 1));
  CHECK_THROWS_AS(set_screening_prime(1000003), Error);
  const ModP a(-5), b(7);
  CHECK((a + b).residue() == 2);
  CHECK((a * a.inverse()).residue() == 1);
  CHECK(ModP::from_rational(Rational(1, 2)) * ModP(2) == ModP(1));
}

TEST_CASE("quadratic extension arithmetic") {
  auto field = std::make_shared<const ExtensionField>(
      RationalPolynomial({Rational(-2), Rational(0), Rational(1)}));
  const auto t = AlgebraicNumber::generator(field);
  CHECK(t * t == AlgebraicNumber(2));
  const auto x = t + AlgebraicNumber(1);
  CHECK(x * x.inverse() == AlgebraicNumber(1));
  CHECK(x.to_string() == "t + 1");
}

TEST_CASE("zero divisor in a reducible quotient splits the modulus") {
  // x^2 - 1 = (x - 1)(x + 1)
  auto field = std::make_shared<const ExtensionField>(
      RationalPolynomial({Rational(-1), Rational(0), Rational(1)}));
  const auto t = AlgebraicNumber::generator(field);
  bool split = false;
  try {
    (void)(t - AlgebraicNumber(1)).inverse();
  } catch (const ExtensionSplit &s) {
    split = true;
    CHECK(s.factor == RationalPolynomial::linear_root(1));
  }
  CHECK(split);
}

TEST_CASE("characteristic polynomial over an extension") {
  auto field = std::make_shared<const ExtensionField>(
      RationalPolynomial({Rational(-2), Rational(0), Rational(1)}));
  const auto t = AlgebraicNumber::generator(field);
  using AMat = Matrix<AlgebraicNumber>;
  AMat m(2, 2);
  m(0, 0) = t;
  m(1, 1) = AlgebraicNumber(0) - t;
  m(0, 1) = AlgebraicNumber(1);
  const auto cp = characteristic_polynomial(m);
  // (x - t)(x + t) = x^2 - 2
  CHECK(cp.coeff(0) == AlgebraicNumber(-2));
  CHECK(is_zero(cp.coeff(1)));
  CHECK(cp.coeff(2) == AlgebraicNumber(1));
}
