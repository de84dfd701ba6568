#include "crlab/algebraic.hpp"

#include "crlab/error.hpp"

#include <sstream>

namespace crlab {

ExtensionField::ExtensionField(RationalPolynomial f) : modulus(f.monic()) {
  if (modulus.degree() < 1)
    throw Error(ErrorKind::InvalidArgument,
                "extension modulus must have positive degree");
}

AlgebraicNumber::AlgebraicNumber(ExtensionPtr field,
                                 std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (field_) {
    c_ = divmod(RationalPolynomial(std::move(c_)), field_->modulus)
             .second.coeffs();
  }
  trim();
}

AlgebraicNumber AlgebraicNumber::generator(const ExtensionPtr &field) {
  return AlgebraicNumber(field, {Rational(0), Rational(1)});
}

void AlgebraicNumber::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0)
    c_.pop_back();
}

void AlgebraicNumber::adopt(const ExtensionPtr &other) {
  if (!other || field_ == other)
    return;
  if (!field_) {
    field_ = other;
    return;
  }
  if (!(field_->modulus == other->modulus))
    throw Error(ErrorKind::InvalidArgument,
                "arithmetic across different extension fields");
}

AlgebraicNumber &AlgebraicNumber::operator+=(const AlgebraicNumber &o) {
  adopt(o.field_);
  if (c_.size() < o.c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] += o.c_[i];
  trim();
  return *this;
}

AlgebraicNumber &AlgebraicNumber::operator-=(const AlgebraicNumber &o) {
  adopt(o.field_);
  if (c_.size() < o.c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] -= o.c_[i];
  trim();
  return *this;
}

AlgebraicNumber &AlgebraicNumber::operator*=(const AlgebraicNumber &o) {
  adopt(o.field_);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  if (c_.size() == 1 && o.c_.size() == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  auto prod = RationalPolynomial(c_) * RationalPolynomial(o.c_);
  if (field_)
    prod = divmod(prod, field_->modulus).second;
  c_ = prod.coeffs();
  return *this;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (c_.empty())
    throw Error(ErrorKind::Singular, "inverse of zero");
  if (c_.size() == 1) {
    AlgebraicNumber r = *this;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  const auto eg = extended_gcd(RationalPolynomial(c_), field_->modulus);
  if (eg.g.degree() > 0)
    throw ExtensionSplit{eg.g};
  return AlgebraicNumber(field_, eg.s.coeffs());
}

std::string AlgebraicNumber::to_string() const {
  if (c_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0)
      continue;
    Rational c = c_[i];
    if (!first)
      os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0)
      os << "-";
    if (sgn(c) < 0)
      c = -c;
    if (i == 0)
      os << c.get_str();
    else {
      if (c != 1)
        os << c.get_str() << "*";
      os << "t";
      if (i > 1)
        os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

} // namespace crlab
