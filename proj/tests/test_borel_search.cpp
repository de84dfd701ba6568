#include "crlab/borel_search.hpp"
#include "crlab/commrank.hpp"
#include "crlab/constructions.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

using namespace crlab;

namespace {

std::uint64_t bit1(std::size_t n, std::size_t i, std::size_t j) {
  return position_bit(n, i - 1, j - 1);
}

std::uint64_t offdiag_mask(std::size_t n) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        m |= position_bit(n, i, j);
  return m;
}

std::uint64_t random_mask(std::size_t n, std::mt19937_64 &rng, int density) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && static_cast<int>(rng() % 100) < density)
        m |= position_bit(n, i, j);
  return m;
}

bool spec_leq(const InvariantSpaceSpec &a, const InvariantSpaceSpec &b) {
  if ((a.s & ~b.s) != 0)
    return false;
  for (std::size_t r = 0; r < a.d.rows(); ++r) {
    Mat m(a.n, a.n);
    for (std::size_t i = 0; i < a.n; ++i)
      m(i, i) = a.d(r, i);
    if (!b.realize().contains(m))
      return false;
  }
  return true;
}

// All set partitions of {0..n-1}, as block labels.
std::vector<std::vector<std::size_t>> all_labelings(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto &self, std::size_t used) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t g = 0; g <= used; ++g) {
      cur.push_back(g);
      self(self, std::max(used, g + 1));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Independent oracle for closedness: the raw rules written out from the
// commutator identity, with D the vectors constant on the blocks of `label`.
bool brute_closed(std::size_t n, std::uint64_t s, const std::vector<std::size_t> &label) {
  auto in = [&](std::size_t i, std::size_t j) { return (s & position_bit(n, i, j)) != 0; };
  auto singleton = [&](std::size_t i) {
    return std::count(label.begin(), label.end(), label[i]) == 1;
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      // [E_pq, d] = (d_q - d_p) E_pq
      if (label[p] != label[q] && !in(p, q))
        return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !in(i, j))
        continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
          // [E_pq, E_ij] = d_qi E_pj - d_jp E_iq
          if (q == i && p != j && !in(p, j))
            return false;
          if (j == p && q != i && !in(i, q))
            return false;
          if (q == i && p == j && !(singleton(i) && singleton(j)))
            return false;
          // E_pq E_ij E_pq = d_qi d_jp E_pq
          if (q == i && p == j && !in(p, q))
            return false;
        }
    }
  return true;
}

} // namespace

TEST_CASE("closure examples") {
  const auto scal = scalar_spec(3, 0);
  CHECK(triangular_closure(scal) == scal);

  const auto c = triangular_closure(scalar_spec(3, bit1(3, 1, 2)));
  CHECK(c.s == (bit1(3, 1, 2) | bit1(3, 1, 3)));
  CHECK(c.d == scal.d);

  const auto c2 = triangular_closure(scalar_spec(2, bit1(2, 2, 1)));
  CHECK(c2.s == (bit1(2, 2, 1) | bit1(2, 1, 2)));
  CHECK(c2.d.rows() == 2);
  CHECK(c2.realize() == MatrixSubspace::full(2));
}

TEST_CASE("closure is extensive, monotone and idempotent") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + rng() % 4;
    const auto rules = t % 4 == 3 ? ClosureRules::ThreeCase : ClosureRules::Full;
    const std::uint64_t s1 = random_mask(n, rng, 15);
    const std::uint64_t s2 = s1 | random_mask(n, rng, 10);
    auto a = scalar_spec(n, s1), b = scalar_spec(n, s2);
    if (t % 2) {
      // Random diagonal part from a partition; b's partition is coarser-free
      // (same D) so a <= b holds.
      a = dmax_spec(n, s1);
      b = InvariantSpaceSpec{n, s2, a.d};
    }
    const auto ca = triangular_closure(a, rules), cb = triangular_closure(b, rules);
    CHECK(spec_leq(a, ca));
    CHECK(spec_leq(ca, cb));
    CHECK(triangular_closure(ca, rules) == ca);
  }
}

TEST_CASE("is_triangular_invariant examples") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 0; k < n; ++k)
      for (auto l : valid_splits(n, k))
        CHECK(is_triangular_invariant(v_k(n, k, l)));
  std::mt19937_64 rng(2);
  CHECK_FALSE(is_triangular_invariant(conjugate(v_k(4, 1, 1), random_invertible(4, 3, rng))));
  CHECK(is_triangular_invariant(MatrixSubspace::full(4)));
}

TEST_CASE("enumeration for n = 2") {
  const auto specs = enumerate_invariant_spaces(2);
  std::vector<std::uint64_t> masks;
  std::vector<std::size_t> ddims;
  for (const auto &s : specs) {
    masks.push_back(s.s);
    ddims.push_back(s.d.rows());
  }
  const auto b12 = bit1(2, 1, 2), b21 = bit1(2, 2, 1);
  CHECK(masks == std::vector<std::uint64_t>{0, b12, b12, b12 | b21});
  CHECK(ddims == std::vector<std::size_t>{1, 1, 2, 2});
  CHECK(specs[1].realize() == schur_space(2));
}

TEST_CASE("enumeration count matches brute-force filtering") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::uint64_t full = offdiag_mask(n);
    const auto labelings = all_labelings(n);
    std::size_t brute = 0;
    // All subsets of the off-diagonal positions, all partition-type D.
    for (std::uint64_t s = full;; s = (s - 1) & full) {
      for (const auto &label : labelings)
        brute += brute_closed(n, s, label);
      if (s == 0)
        break;
    }
    CHECK(enumerate_invariant_spaces(n).size() == brute);
  }
}

TEST_CASE("enumerated specs are closed and invariant") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto &spec : enumerate_invariant_spaces(n)) {
      CHECK(triangular_closure(spec) == spec);
      const auto v = spec.realize();
      CHECK(v.dim() == spec.dim());
      CHECK(is_triangular_invariant(v));
      CHECK(spec.partition().has_value());
      // Direct conjugation checks on a sample of the specs.
      if (rng() % 8 != 0)
        continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          for (int t = 0; t < 3; ++t) {
            Mat p = Mat::identity(n);
            p(i, j) = Rational(random_coefficient(rng, 9), 1 + rng() % 5);
            p(i, j).canonicalize();
            CHECK(conjugate(v, p) == v);
          }
      std::vector<Rational> diag(n);
      for (auto &x : diag)
        x = 1 + static_cast<long>(rng() % 7);
      CHECK(conjugate(v, Mat::diagonal(diag)) == v);
    }
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_invariant_spaces(max_search_n() + 1), Error);
}

TEST_CASE("t_bound") {
  CHECK(t_bound(5, 2, 1) == 13);
  CHECK(t_bound(5, 2, 3) == 11);
  CHECK_THROWS_AS(t_bound(5, 2, 4), Error);
  CHECK_THROWS_AS(t_bound(5, 2, 0), Error);
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t best = 0;
      for (std::size_t t = 1; t <= n - k; ++t)
        best = std::max(best, t_bound(n, k, t));
      CHECK(best == dimension_bound(n, k));
    }
}

TEST_CASE("search examples") {
  const auto r31 = search_max_dimension(3, 1, 16, 1);
  CHECK(r31.max_dim == 5);
  CHECK(r31.matches_bound());
  bool has_vk = false;
  for (const auto &s : r31.argmax)
    has_vk = has_vk || s.realize() == v_k(3, 1, 1);
  CHECK(has_vk);

  CHECK(search_max_dimension(2, 1, 16, 1).max_dim == 3);

  const auto r40 = search_max_dimension(4, 0, 16, 1);
  CHECK(r40.max_dim == 5);
  for (const auto &s : r40.argmax) {
    const auto v = s.realize();
    CHECK((v == schur_space(4) || v == transpose_space(schur_space(4)) ||
           is_algebra(v)));
  }
  bool has_schur = false;
  for (const auto &s : r40.argmax)
    has_schur = has_schur || s.realize() == schur_space(4) ||
                s.realize() == transpose_space(schur_space(4));
  CHECK(has_schur);
}

TEST_CASE("search result does not depend on jobs") {
  const auto a = search_max_dimension(4, 1, 8, 3, ClosureRules::Full, 1);
  const auto b = search_max_dimension(4, 1, 8, 3, ClosureRules::Full, 3);
  CHECK(a.max_dim == b.max_dim);
  CHECK(a.argmax == b.argmax);
  CHECK(a.sampled == b.sampled);
}

TEST_CASE("pruned specs are certified by sampling too") {
  std::size_t checked = 0;
  for (std::size_t n = 3; n <= 5 && checked < 50; ++n)
    for (std::size_t k = 1; k + 1 < n && checked < 50; ++k)
      for (const auto &spec : enumerate_invariant_spaces(n)) {
        if (!staircase_pruned(n, k, spec.s))
          continue;
        CHECK(satisfies_rank_condition(spec.realize(), k, 8, spec.s).verdict ==
              RankVerdict::CertifiedNo);
        if (++checked == 50)
          break;
      }
  CHECK(checked == 50);
}

TEST_CASE("search bound for small n, both rule sets") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      const auto r = search_max_dimension(n, k, 16, 11);
      CHECK(r.max_dim == dimension_bound(n, k));
      for (const auto &s : r.argmax)
        CHECK(is_algebra(s.realize()));
      const auto t = search_max_dimension(n, k, 16, 11, ClosureRules::ThreeCase);
      CHECK(t.enumerated >= r.enumerated);
      CHECK(t.max_dim >= r.max_dim);
    }
}
