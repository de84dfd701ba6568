#pragma once

// Arithmetic in Q[x]/(f) for a monic squarefree f. When f is irreducible this
// is the number field Q(theta), theta a root of f. When f is reducible,
// inverting a zero divisor throws ExtensionSplit carrying a proper factor of
// f, and the caller restarts over the smaller quotient (dynamic evaluation).

#include "crlab/field.hpp"
#include "crlab/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace crlab {

using RationalPolynomial = Polynomial<Rational>;

struct ExtensionField {
  explicit ExtensionField(RationalPolynomial f);
  RationalPolynomial modulus; // monic, degree >= 1
};

using ExtensionPtr = std::shared_ptr<const ExtensionField>;

/// Thrown when a zero divisor of Q[x]/(f) is inverted.
struct ExtensionSplit {
  RationalPolynomial factor; // monic proper factor of the modulus
};

class AlgebraicNumber {
public:
  AlgebraicNumber() = default;
  AlgebraicNumber(long v) : c_{Rational(v)} { trim(); } // NOLINT
  AlgebraicNumber(const Rational &q) : c_{q} { trim(); } // NOLINT
  AlgebraicNumber(ExtensionPtr field, std::vector<Rational> coeffs);

  /// The generator theta of `field`.
  static AlgebraicNumber generator(const ExtensionPtr &field);

  const ExtensionPtr &field() const { return field_; }
  /// Coefficients of the canonical representative, low to high.
  const std::vector<Rational> &coeffs() const { return c_; }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const { return c_.empty() ? Rational(0) : c_[0]; }

  AlgebraicNumber inverse() const;

  AlgebraicNumber &operator+=(const AlgebraicNumber &o);
  AlgebraicNumber &operator-=(const AlgebraicNumber &o);
  AlgebraicNumber &operator*=(const AlgebraicNumber &o);
  AlgebraicNumber &operator/=(const AlgebraicNumber &o) {
    return *this *= o.inverse();
  }

  friend AlgebraicNumber operator+(AlgebraicNumber a,
                                   const AlgebraicNumber &b) {
    return a += b;
  }
  friend AlgebraicNumber operator-(AlgebraicNumber a,
                                   const AlgebraicNumber &b) {
    return a -= b;
  }
  friend AlgebraicNumber operator*(AlgebraicNumber a,
                                   const AlgebraicNumber &b) {
    return a *= b;
  }
  friend AlgebraicNumber operator/(AlgebraicNumber a,
                                   const AlgebraicNumber &b) {
    return a /= b;
  }
  friend bool operator==(const AlgebraicNumber &a, const AlgebraicNumber &b) {
    return a.c_ == b.c_;
  }

  /// Human-readable form in the generator `t`, e.g. "3/2*t + 1".
  std::string to_string() const;

private:
  void adopt(const ExtensionPtr &other);
  void trim();
  ExtensionPtr field_;   // null for plain rationals
  std::vector<Rational> c_; // no trailing zeros
};

inline bool is_zero(const AlgebraicNumber &x) { return x.coeffs().empty(); }

} // namespace crlab
