#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kolchin {

/// Sparse power product over integer-indexed variables: (variable, exponent)
/// pairs sorted by variable index, every exponent positive.
using PowerProduct = std::vector<std::pair<int, int>>;

/// Lex comparison of power products. Variable 0 is the most significant.
std::strong_ordering lex_compare(const PowerProduct& a, const PowerProduct& b);

PowerProduct multiply(const PowerProduct& a, const PowerProduct& b);

/// Multivariate polynomial with rational coefficients.
///
/// Terms are stored in descending lex order and never carry a zero
/// coefficient, so structural equality is mathematical equality. This is the
/// numerator/denominator type of the base field and the workhorse for
/// content and gcd computations.
class MPoly {
 public:
  struct Term {
    PowerProduct monomial;
    mpq_class coefficient;
  };

  MPoly() = default;
  MPoly(long value);  // NOLINT(google-explicit-constructor)
  explicit MPoly(const mpq_class& value);

  static MPoly variable(int index, int exponent = 1);
  /// Builds a polynomial from unsorted terms, combining duplicates.
  static MPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  int degree(int var) const;
  /// Smallest variable index occurring, or -1 for constants.
  int lowest_variable() const;
  bool contains(int var) const;
  /// c[k] is the coefficient of var^k.
  std::vector<MPoly> coefficients(int var) const;
  MPoly partial_derivative(int var) const;
  MPoly scaled(const mpq_class& c) const;
  MPoly monic() const;
  MPoly pow(unsigned exponent) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);

  std::optional<MPoly> divide_exact(const MPoly& divisor) const;

 private:
  std::vector<Term> terms_;
};

/// Monic gcd over Q[vars]; gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);
MPoly pseudo_remainder(const MPoly& f, const MPoly& g, int var);
/// Gcd of the coefficients of f viewed as a polynomial in var.
MPoly content_in(const MPoly& f, int var);

/// Deterministic total order used for canonical sorting.
std::strong_ordering canonical_compare(const MPoly& a, const MPoly& b);
std::strong_ordering canonical_compare(const mpq_class& a, const mpq_class& b);

}  // namespace kolchin
