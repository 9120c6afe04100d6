#include "kolchin/scalar.hpp"

#include <stdexcept>

namespace kolchin {

Scalar::Scalar(MPoly numerator, MPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (den_.is_constant()) {
    const mpq_class d = den_.constant_value();
    if (d != 1) num_ = num_.scaled(1 / d);
    den_ = MPoly(1);
    return;
  }
  if (!num_.is_constant()) {
    const MPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  const mpq_class lc = den_.leading_term().coefficient;
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
  if (den_.is_constant()) den_ = MPoly(1);
}

bool Scalar::is_one() const {
  return den_.is_constant() && num_.is_constant() && !num_.is_zero() &&
         num_.constant_value() == 1;
}

mpq_class Scalar::rational_value() const {
  if (!is_rational()) throw std::logic_error("Scalar is not a rational number");
  return num_.constant_value();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  Scalar s;
  s.num_ = den_;
  s.den_ = num_;
  s.normalize();
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
    if (!den_.is_constant()) normalize();
    return *this;
  }
  num_ = num_ * other.den_ + den_ * other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_rational() && other.is_rational()) {
    num_ *= other.num_;
    return *this;
  }
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b) {
  if (auto c = canonical_compare(a.denominator(), b.denominator()); c != 0) return c;
  return canonical_compare(a.numerator(), b.numerator());
}

}  // namespace kolchin
