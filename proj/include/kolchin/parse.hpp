#pragma once

#include "kolchin/diffpoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace kolchin {

/// Syntax or naming error with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error(std::move(message)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses a differential polynomial.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*        divisors must be base scalars
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | '(' expr ')' | name derivative?
///
/// Derivatives: apostrophes (y'') or y^(k) in the ordinary case, and an
/// underscore followed by derivation names (u_xxy) in any case.
DiffPolynomial parse_polynomial(std::string_view text, const DerivationBasis& basis);

/// Parses a base-field element (transcendentals and rationals only).
Scalar parse_scalar(std::string_view text, const DerivationBasis& basis);

}  // namespace kolchin
