#pragma once

// Scalar types usable as entries of Matrix<F>:
//   Rational     exact rational (GMP mpq, always canonical)
//   ModP         residue modulo the session screening prime
// Both provide + - * / and crlab::is_zero.

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace crlab {

using Rational = mpq_class;
using BigInt = mpz_class;

inline bool is_zero(const Rational &x) { return sgn(x) == 0; }

/// Decimal "p/q" with q omitted when 1. Always reduced.
std::string to_string(const Rational &x);

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
/// Throws Error(Parse) on malformed input.
Rational parse_rational(std::string_view text);

// ---------------------------------------------------------------------------
// Screening prime. One prime per process, fixed before first use; defaults to
// 2^61 - 1 and may be overridden by CRLAB_PRIME.

constexpr std::uint64_t kDefaultScreeningPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t screening_prime();

/// Replaces the screening prime. Must be a prime > 2^30 and < 2^63.
void set_screening_prime(std::uint64_t p);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

class ModP {
public:
  ModP() = default;
  ModP(long long v); // NOLINT(google-explicit-constructor)
  static ModP from_residue(std::uint64_t r) {
    ModP x;
    x.v_ = r;
    return x;
  }
  /// Image of a rational under Z_(p) -> F_p. Throws Error(Singular) if p
  /// divides the denominator.
  static ModP from_rational(const Rational &q);

  std::uint64_t residue() const { return v_; }

  ModP &operator+=(ModP o);
  ModP &operator-=(ModP o);
  ModP &operator*=(ModP o);
  ModP &operator/=(ModP o) { return *this *= o.inverse(); }
  ModP operator-() const;
  ModP inverse() const;

  friend ModP operator+(ModP a, ModP b) { return a += b; }
  friend ModP operator-(ModP a, ModP b) { return a -= b; }
  friend ModP operator*(ModP a, ModP b) { return a *= b; }
  friend ModP operator/(ModP a, ModP b) { return a /= b; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

private:
  std::uint64_t v_ = 0;
};

inline bool is_zero(const ModP &x) { return x.residue() == 0; }

namespace detail {
// Reachable from class scopes whose own is_zero() member would hide the
// free overloads.
template <class F> bool entry_is_zero(const F &x) { return is_zero(x); }
} // namespace detail

} // namespace crlab
