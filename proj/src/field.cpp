#include "crlab/field.hpp"

#include "crlab/error.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

namespace crlab {

std::string to_string(const Rational &x) { return x.get_str(10); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty())
      return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-')
      i = 1;
    if (i == s.size())
      return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        return false;
    return true;
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_int(num, true))
    throw Error(ErrorKind::Parse, "malformed rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos)
    return Rational(BigInt(std::string(num), 10));
  const auto den = text.substr(slash + 1);
  if (!valid_int(den, false))
    throw Error(ErrorKind::Parse, "malformed rational: '" + std::string(text) + "'");
  BigInt d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorKind::Parse, "zero denominator: '" + std::string(text) + "'");
  Rational q(BigInt(std::string(num), 10), d);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t initial_prime() {
  if (const char *env = std::getenv("CRLAB_PRIME")) {
    char *end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v <= (1ull << 30) || v >= (1ull << 63) ||
        !is_prime_u64(v))
      throw Error(ErrorKind::InvalidArgument,
                  "CRLAB_PRIME must be a prime in (2^30, 2^63)");
    return v;
  }
  return kDefaultScreeningPrime;
}

std::uint64_t &prime_storage() {
  static std::uint64_t p = initial_prime();
  return p;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0)
      return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::uint64_t screening_prime() { return prime_storage(); }

void set_screening_prime(std::uint64_t p) {
  if (p <= (1ull << 30) || p >= (1ull << 63) || !is_prime_u64(p))
    throw Error(ErrorKind::InvalidArgument,
                "screening prime must be a prime in (2^30, 2^63)");
  prime_storage() = p;
}

ModP::ModP(long long v) {
  const std::uint64_t p = screening_prime();
  if (v >= 0) {
    v_ = static_cast<std::uint64_t>(v) % p;
  } else {
    const std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1;
    const std::uint64_t r = m % p;
    v_ = r == 0 ? 0 : p - r;
  }
}

ModP ModP::from_rational(const Rational &q) {
  const unsigned long p = screening_prime();
  const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0)
    throw Error(ErrorKind::Singular, "screening prime divides a denominator");
  const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return from_residue(num) / from_residue(den);
}

ModP &ModP::operator+=(ModP o) {
  const std::uint64_t p = screening_prime();
  v_ += o.v_;
  if (v_ >= p)
    v_ -= p;
  return *this;
}

ModP &ModP::operator-=(ModP o) {
  const std::uint64_t p = screening_prime();
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p - o.v_);
  return *this;
}

ModP &ModP::operator*=(ModP o) {
  v_ = mulmod(v_, o.v_, screening_prime());
  return *this;
}

ModP ModP::operator-() const {
  return v_ == 0 ? *this : from_residue(screening_prime() - v_);
}

ModP ModP::inverse() const {
  if (v_ == 0)
    throw Error(ErrorKind::Singular, "inverse of zero in F_p");
  const std::uint64_t p = screening_prime();
  return from_residue(powmod(v_, p - 2, p));
}

} // namespace crlab
