#include "crlab/commrank.hpp"
#include "crlab/constructions.hpp"

#include <doctest.h>

#include <random>

using namespace crlab;

namespace {

Mat E(std::size_t n, std::size_t i, std::size_t j) { return Mat::unit(n, i - 1, j - 1); }

bool basis_commutes(const MatrixSubspace &v) {
  const auto b = v.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!commutator(b[i], b[j]).is_zero())
        return false;
  return true;
}

} // namespace

TEST_CASE("schur_space") {
  CHECK(schur_space(4).dim() == 5);
  CHECK(schur_space(2).dim() == 2);
  CHECK(schur_space(4).contains(E(4, 1, 3)));
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(schur_space(n).dim() == n * n / 4 + 1);
    CHECK(basis_commutes(schur_space(n)));
    CHECK(is_algebra(schur_space(n)));
  }
}

TEST_CASE("v_k examples") {
  CHECK(v_k(5, 2, 1).dim() == 13);
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(v_k(n, 0, n / 2) == schur_space(n));
  CHECK(v_k(7, 2, 2).dim() == 21);
  CHECK(v_k(7, 2, 3).dim() == 21);
  CHECK_FALSE(v_k(7, 2, 2) == v_k(7, 2, 3));
  CHECK_THROWS_AS(v_k(5, 2, 0), Error);
  CHECK_THROWS_AS(v_k(5, 5, 0), Error);
}

TEST_CASE("v_k dimension, algebra, and position-count oracle") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l : valid_splits(n, k)) {
        const auto v = v_k(n, k, l);
        // Independent count: k full rows, an l x (n-k-l) block, and I
        // contributing one new direction.
        CHECK(v.dim() == k * n + l * (n - k - l) + 1);
        CHECK(v.dim() == dimension_bound(n, k));
        if (n <= 6)
          CHECK(is_algebra(v));
      }
}

TEST_CASE("v_k rank condition is tight for n <= 6") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      const auto v = v_k(n, k, (n - k) / 2);
      CHECK(satisfies_rank_condition(v, k, 32, 5).verdict == RankVerdict::ProbableYes);
      if (k >= 1) {
        const auto no = satisfies_rank_condition(v, k - 1, 32, 5);
        CHECK(no.verdict == RankVerdict::CertifiedNo);
        CHECK(rank(commutator(no.profile.witness_a, no.profile.witness_b)) == k);
      }
    }
}

TEST_CASE("thm2_space") {
  CHECK(thm2_space(3, Thm2Side::LastRow).dim() == 7);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto last = thm2_space(n, Thm2Side::LastRow);
    const auto first = thm2_space(n, Thm2Side::FirstCol);
    CHECK(last.dim() == n * n - n + 1);
    CHECK(first.dim() == n * n - n + 1);
    CHECK(is_algebra(last));
    CHECK(is_algebra(first));
    CHECK(last == v_k(n, n - 1, 0));
    // FirstCol is the transpose of LastRow conjugated by the reversal J.
    Mat j(n, n);
    for (std::size_t i = 0; i < n; ++i)
      j(i, n - 1 - i) = 1;
    CHECK(conjugate(transpose_space(last), j) == first);
  }
  std::mt19937_64 rng(4);
  const auto v = thm2_space(4, Thm2Side::LastRow);
  for (int t = 0; t < 100; ++t)
    CHECK(determinant(commutator(random_member(v, rng, 100), random_member(v, rng, 100))) == 0);
}

TEST_CASE("rank_one_max_space") {
  CHECK(rank_one_max_space(5, CornerVariant::Generic, 2).dim() == 10);
  CHECK(max_commutator_rank(rank_one_max_space(5, CornerVariant::Generic, 2), 32, 1)
            .probable_max == 1);
  const auto d3 = rank_one_max_space(4, CornerVariant::Diag3);
  CHECK(d3.dim() == 7);
  CHECK(d3.contains(E(4, 2, 2)));
  CHECK(d3.contains(E(4, 3, 3)));
  CHECK(d3.contains(E(4, 4, 4)));
  CHECK(rank_one_max_space(2, CornerVariant::Scalar) ==
        MatrixSubspace::span(2, {E(2, 1, 1), E(2, 1, 2), Mat::identity(2)}));
  CHECK_THROWS_AS(rank_one_max_space(5, CornerVariant::Diag3), Error);

  struct Case {
    std::size_t n;
    CornerVariant v;
  };
  const Case cases[] = {{4, CornerVariant::Diag3},  {4, CornerVariant::NilRank1PlusC},
                        {4, CornerVariant::NilRank2}, {3, CornerVariant::Diag2},
                        {2, CornerVariant::Scalar}};
  for (const auto &c : cases) {
    const auto v = rank_one_max_space(c.n, c.v);
    CHECK(v.dim() == dimension_bound(c.n, 1));
    CHECK(satisfies_rank_condition(v, 1, 32, 2).verdict == RankVerdict::ProbableYes);
    CHECK(basis_commutes(MatrixSubspace::span(c.n - 1, corner_basis(c.v, c.n - 1))));
  }
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t l : valid_splits(n, 1))
      CHECK(rank_one_max_space(n, CornerVariant::Generic, l).dim() == dimension_bound(n, 1));
}

TEST_CASE("flanders_space") {
  std::mt19937_64 rng(6);
  const auto f = flanders_space(4, 4, 2);
  CHECK(f.dim() == 8);
  for (int t = 0; t < 20; ++t)
    CHECK(rank(random_member(f, rng, 50)) <= 2);
  CHECK(flanders_space(3, 4, 0).dim() == 0);
  CHECK(flanders_space(3, 5, 3) == MatrixSubspace::full(3, 5));
  CHECK(flanders_space(5, 2, 1).dim() == 5);
  CHECK_THROWS_AS(flanders_space(3, 2, 3), Error);
}

TEST_CASE("bidiagonal witness pair") {
  const auto [a, b] = bidiagonal_witness_pair(4, 2, {1, 1}, {1, 3});
  const Mat c = commutator(a, b);
  CHECK(c == Mat::diagonal({Rational(-1), Rational(-2), Rational(3), Rational(0)}));
  CHECK(rank(c) == 3);

  const auto [z1, z2] = bidiagonal_witness_pair(5, 3, {0, 0, 0}, {1, 2, 3});
  CHECK(commutator(z1, z2).is_zero());

  const auto [p, q] = bidiagonal_witness_pair(5, 3, {1, 1, 1}, {1, 2, 3});
  CHECK(commutator(p, q) ==
        Mat::diagonal({Rational(-1), Rational(-1), Rational(-1), Rational(3), Rational(0)}));
  CHECK(rank(commutator(p, q)) == 4);
  CHECK_THROWS_AS(bidiagonal_witness_pair(4, 2, {1}, {1, 1}), Error);
}

TEST_CASE("bidiagonal commutator matches closed form") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t s = 1; s < n; ++s) {
      std::vector<Rational> lam(s), mu(s);
      for (std::size_t i = 0; i < s; ++i) {
        lam[i] = random_coefficient(rng, 9);
        mu[i] = random_coefficient(rng, 9);
      }
      const auto [a, b] = bidiagonal_witness_pair(n, s, lam, mu);
      std::vector<Rational> d(n);
      // d_i = lambda_{i-1} mu_{i-1} - lambda_i mu_i, out-of-range terms zero.
      for (std::size_t i = 0; i < n; ++i) {
        if (i >= 1 && i - 1 < s)
          d[i] += lam[i - 1] * mu[i - 1];
        if (i < s)
          d[i] -= lam[i] * mu[i];
      }
      CHECK(commutator(a, b) == Mat::diagonal(d));
    }
}

TEST_CASE("build from a family spec") {
  FamilySpec spec;
  spec.family = parse_family("vk");
  spec.n = 5;
  spec.k = 2;
  spec.l = 1;
  CHECK(build(spec) == v_k(5, 2, 1));
  spec.family = Family::Flanders;
  spec.m = 3;
  spec.k = 1;
  CHECK(build(spec).rows() == 3);
  CHECK(build(spec).cols() == 5);
  CHECK_THROWS_AS(parse_family("nope"), Error);
  CHECK(parse_corner_variant("nilrank1_plus_C") == CornerVariant::NilRank1PlusC);
  spec = FamilySpec{};
  spec.family = Family::Exceptional;
  spec.n = 5;
  spec.k = 2;
  spec.variant = CornerVariant::Diag3;
  CHECK(build(spec).dim() == dimension_bound(5, 2));
}
