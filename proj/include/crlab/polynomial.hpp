#pragma once

#include "crlab/error.hpp"
#include "crlab/field.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace crlab {

/// Dense univariate polynomial over a field, coefficients stored low to high.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
template <class F> class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  static Polynomial constant(const F &c) { return Polynomial({c}); }
  /// x
  static Polynomial variable() { return Polynomial({F(0), F(1)}); }
  /// x - root
  static Polynomial linear_root(const F &root) {
    return Polynomial({F(0) - root, F(1)});
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const F &lead() const { return c_.back(); }
  const std::vector<F> &coeffs() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }

  F operator()(const F &x) const {
    F acc(0);
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = acc * x + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * F(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero())
      return *this;
    const F inv = F(1) / lead();
    std::vector<F> m(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
      m[i] = c_[i] * inv;
    return Polynomial(std::move(m));
  }

  friend Polynomial operator+(const Polynomial &a, const Polynomial &b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      r[i] = r[i] + b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial &a, const Polynomial &b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      r[i] = r[i] - b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.c_ == b.c_;
  }

private:
  void normalize() {
    while (!c_.empty() && detail::entry_is_zero(c_.back()))
      c_.pop_back();
  }
  std::vector<F> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F> &a,
                                               const Polynomial<F> &b) {
  if (b.is_zero())
    throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<F> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db)
    return {Polynomial<F>(), a};
  std::vector<F> quot(static_cast<std::size_t>(a.degree() - db + 1), F(0));
  const F inv_lead = F(1) / b.lead();
  for (long i = a.degree(); i >= db; --i) {
    const F c = rem[static_cast<std::size_t>(i)] * inv_lead;
    quot[static_cast<std::size_t>(i - db)] = c;
    if (detail::entry_is_zero(c))
      continue;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] =
          rem[static_cast<std::size_t>(i - db + j)] -
          c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class F> struct ExtendedGcd {
  Polynomial<F> g, s, t;
};

template <class F>
ExtendedGcd<F> extended_gcd(const Polynomial<F> &a, const Polynomial<F> &b) {
  Polynomial<F> r0 = a, r1 = b;
  Polynomial<F> s0 = Polynomial<F>::constant(F(1)), s1;
  Polynomial<F> t0, t1 = Polynomial<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero())
    return {r0, s0, t0};
  const auto scale = Polynomial<F>::constant(F(1) / r0.lead());
  return {r0.monic(), s0 * scale, t0 * scale};
}

/// Product of the distinct monic irreducible factors (char 0 only).
template <class F> Polynomial<F> squarefree_part(const Polynomial<F> &p) {
  if (p.degree() <= 0)
    return p.monic();
  const auto g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

} // namespace crlab
