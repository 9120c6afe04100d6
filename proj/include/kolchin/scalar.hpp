#pragma once

#include "kolchin/mpoly.hpp"

#include <compare>

namespace kolchin {

/// Element of Q(t1, ..., tk), stored as a reduced fraction of MPolys.
///
/// Canonical form: numerator and denominator coprime, denominator monic
/// (leading lex coefficient 1), zero is 0/1. Plain rationals keep a constant
/// denominator of 1 and never touch the gcd machinery.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& value) : num_(value), den_(1) {}
  explicit Scalar(MPoly numerator) : num_(std::move(numerator)), den_(1) {}
  Scalar(MPoly numerator, MPoly denominator);

  static Scalar generator(int index) { return Scalar(MPoly::variable(index)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class rational_value() const;
  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();

  MPoly num_;
  MPoly den_;
};

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b);

}  // namespace kolchin
