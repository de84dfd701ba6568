#include "crlab/constructions.hpp"

#include "crlab/error.hpp"

#include <algorithm>

namespace crlab {

namespace {

Mat E(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  return Mat::unit(rows, cols, i - 1, j - 1);
}

Mat E(std::size_t n, std::size_t i, std::size_t j) { return E(n, n, i, j); }

void require(bool ok, const char *what) {
  if (!ok)
    throw Error(ErrorKind::InvalidArgument, what);
}

/// Free rows 1..k of an n x n matrix.
void push_band(std::vector<Mat> &gens, std::size_t n, std::size_t k) {
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      gens.push_back(E(n, i, j));
}

} // namespace

MatrixSubspace schur_space(std::size_t n) {
  require(n >= 1, "schur_space requires n >= 1");
  return v_k(n, 0, n / 2);
}

std::vector<std::size_t> valid_splits(std::size_t n, std::size_t k) {
  require(k < n, "split parameters need k < n");
  const std::size_t c = n - k;
  if (c % 2 == 0)
    return {c / 2};
  return {c / 2, c / 2 + 1};
}

MatrixSubspace v_k(std::size_t n, std::size_t k, std::size_t l) {
  require(k < n, "v_k requires 0 <= k < n");
  const auto splits = valid_splits(n, k);
  require(std::find(splits.begin(), splits.end(), l) != splits.end(),
          "v_k requires l in {floor((n-k)/2), ceil((n-k)/2)}");
  std::vector<Mat> gens{Mat::identity(n)};
  push_band(gens, n, k);
  for (std::size_t i = k + 1; i <= k + l; ++i)
    for (std::size_t j = k + l + 1; j <= n; ++j)
      gens.push_back(E(n, i, j));
  return MatrixSubspace::span(n, gens);
}

MatrixSubspace vk_transpose(std::size_t n, std::size_t k, std::size_t l) {
  return transpose_space(v_k(n, k, l));
}

MatrixSubspace thm2_space(std::size_t n, Thm2Side side) {
  require(n >= 2, "thm2_space requires n >= 2");
  std::vector<Mat> gens;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const bool dropped = side == Thm2Side::LastRow ? (i == n && j < n)
                                                     : (j == 1 && i > 1);
      if (!dropped)
        gens.push_back(E(n, i, j));
    }
  return MatrixSubspace::span(n, gens);
}

std::string to_string(CornerVariant v) {
  switch (v) {
  case CornerVariant::Generic:
    return "generic";
  case CornerVariant::Diag3:
    return "diag3";
  case CornerVariant::NilRank1PlusC:
    return "nilrank1_plus_C";
  case CornerVariant::NilRank2:
    return "nilrank2";
  case CornerVariant::Diag2:
    return "diag2";
  case CornerVariant::Scalar:
    return "scalar";
  }
  return "?";
}

CornerVariant parse_corner_variant(const std::string &tag) {
  for (auto v : {CornerVariant::Generic, CornerVariant::Diag3,
                 CornerVariant::NilRank1PlusC, CornerVariant::NilRank2,
                 CornerVariant::Diag2, CornerVariant::Scalar})
    if (to_string(v) == tag)
      return v;
  throw Error(ErrorKind::Parse, "unknown variant: " + tag);
}

std::size_t corner_size(CornerVariant v) {
  switch (v) {
  case CornerVariant::Diag3:
  case CornerVariant::NilRank1PlusC:
  case CornerVariant::NilRank2:
    return 3;
  case CornerVariant::Diag2:
    return 2;
  case CornerVariant::Scalar:
    return 1;
  case CornerVariant::Generic:
    break;
  }
  return 0;
}

std::vector<Mat> corner_basis(CornerVariant v, std::size_t c, std::size_t l) {
  if (v == CornerVariant::Generic) {
    require(c >= 1, "corner must be nonempty");
    return v_k(c, 0, l).basis();
  }
  require(c == corner_size(v), "variant does not fit this corner size");
  switch (v) {
  case CornerVariant::Diag3:
    return {E(3, 1, 1), E(3, 2, 2), E(3, 3, 3)};
  case CornerVariant::NilRank1PlusC:
    return {E(3, 1, 1) + E(3, 2, 2), E(3, 1, 2), E(3, 3, 3)};
  case CornerVariant::NilRank2:
    return {Mat::identity(3), E(3, 1, 2) + E(3, 2, 3), E(3, 1, 3)};
  case CornerVariant::Diag2:
    return {E(2, 1, 1), E(2, 2, 2)};
  case CornerVariant::Scalar:
    return {Mat::identity(1)};
  case CornerVariant::Generic:
    break;
  }
  return {};
}

MatrixSubspace exceptional_space(std::size_t n, std::size_t k, CornerVariant v,
                                 std::size_t l) {
  require(k < n, "exceptional_space requires k < n");
  if (v == CornerVariant::Generic)
    return v_k(n, k, l);
  const std::size_t c = n - k;
  std::vector<Mat> gens{Mat::identity(n)};
  push_band(gens, n, k);
  for (const auto &b : corner_basis(v, c)) {
    Mat m(n, n);
    m.set_block(k, k, b);
    gens.push_back(m);
  }
  return MatrixSubspace::span(n, gens);
}

MatrixSubspace rank_one_max_space(std::size_t n, CornerVariant v, std::size_t l) {
  require(n >= 2, "rank_one_max_space requires n >= 2");
  return exceptional_space(n, 1, v, l);
}

MatrixSubspace flanders_space(std::size_t m, std::size_t n_cols, std::size_t k) {
  require(m >= 1 && n_cols >= 1, "flanders_space requires a nonempty shape");
  require(k <= std::min(m, n_cols), "flanders_space requires k <= min(m, n)");
  std::vector<Mat> gens;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n_cols; ++j)
      if (n_cols >= m ? i <= k : j <= k)
        gens.push_back(E(m, n_cols, i, j));
  return MatrixSubspace::span(m, n_cols, gens);
}

std::pair<Mat, Mat> bidiagonal_witness_pair(std::size_t n, std::size_t s,
                                            const std::vector<Rational> &lambdas,
                                            const std::vector<Rational> &mus) {
  require(s >= 1 && s + 1 <= n, "bidiagonal pair requires 1 <= s <= n-1");
  if (lambdas.size() != s || mus.size() != s)
    throw Error(ErrorKind::SizeMismatch, "lambda and mu lists must have length s");
  Mat a(n, n), b(n, n);
  for (std::size_t i = 0; i < s; ++i) {
    a(i + 1, i) = lambdas[i];
    b(i, i + 1) = mus[i];
  }
  return {a, b};
}

std::string to_string(Family f) {
  switch (f) {
  case Family::Schur:
    return "schur";
  case Family::Vk:
    return "vk";
  case Family::VkTranspose:
    return "vk-t";
  case Family::Thm2LastRow:
    return "thm2-lastrow";
  case Family::Thm2FirstCol:
    return "thm2-firstcol";
  case Family::RankOneMax:
    return "rank1max";
  case Family::Flanders:
    return "flanders";
  case Family::Exceptional:
    return "exceptional";
  }
  return "?";
}

Family parse_family(const std::string &name) {
  for (auto f : {Family::Schur, Family::Vk, Family::VkTranspose,
                 Family::Thm2LastRow, Family::Thm2FirstCol, Family::RankOneMax,
                 Family::Flanders, Family::Exceptional})
    if (to_string(f) == name)
      return f;
  throw Error(ErrorKind::Parse, "unknown family: " + name);
}

MatrixSubspace build(const FamilySpec &spec) {
  const std::size_t n = spec.n;
  switch (spec.family) {
  case Family::Schur:
    return schur_space(n);
  case Family::Vk:
  case Family::VkTranspose: {
    require(spec.k < n, "vk requires k < n");
    const std::size_t l = spec.l.value_or((n - spec.k) / 2);
    return spec.family == Family::Vk ? v_k(n, spec.k, l) : vk_transpose(n, spec.k, l);
  }
  case Family::Thm2LastRow:
    return thm2_space(n, Thm2Side::LastRow);
  case Family::Thm2FirstCol:
    return thm2_space(n, Thm2Side::FirstCol);
  case Family::RankOneMax:
    require(n >= 2, "rank1max requires n >= 2");
    return rank_one_max_space(n, spec.variant, spec.l.value_or((n - 1) / 2));
  case Family::Flanders:
    return flanders_space(spec.m.value_or(n), n, spec.k);
  case Family::Exceptional:
    require(spec.k < n, "exceptional requires k < n");
    return exceptional_space(n, spec.k, spec.variant,
                             spec.l.value_or((n - spec.k) / 2));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

} // namespace crlab
