#pragma once

#include "kolchin/diffpoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kolchin::algebra {

/// Dense exponent vector; index 0 is the most significant variable.
using Exponents = std::vector<std::uint16_t>;

/// Lex comparison, index 0 heaviest.
std::strong_ordering lex_compare(const Exponents& a, const Exponents& b);

/// Polynomial over a fixed number of variables with base-field coefficients.
/// Terms are kept in strictly descending lex order with nonzero coefficients.
class Polynomial {
 public:
  struct Term {
    Exponents exponents;
    Scalar coefficient;
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial monomial(const Exponents& e, const Scalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Exponents& leading_monomial() const { return terms_.front().exponents; }

  Polynomial monic() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial shifted(const Exponents& e, const Scalar& c) const;  // c * x^e * this
  /// this -= c * x^e * g
  void sub_mul(const Scalar& c, const Exponents& e, const Polynomial& g);
  /// Inserts k new most-significant variables (exponent 0).
  Polynomial lifted(std::size_t k) const;
  /// Removes the first k variables; requires their exponents to be zero.
  Polynomial dropped(std::size_t k) const;
  /// Permutes variables: new index i takes old index perm[i].
  Polynomial permuted(const std::vector<std::size_t>& perm) const;
  bool involves(std::size_t index) const;
  /// Removes the leading term.
  void drop_leading() { terms_.erase(terms_.begin()); }
  /// Everything but the leading term.
  Polynomial tail() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

bool divides(const Exponents& d, const Exponents& m);
Exponents lcm(const Exponents& a, const Exponents& b);
Exponents quotient(const Exponents& m, const Exponents& d);

/// Reduced Groebner basis by Buchberger's algorithm (normal strategy, coprime
/// and chain criteria). Output is monic, interreduced and sorted by
/// increasing leading monomial.
std::vector<Polynomial> buchberger(std::vector<Polynomial> generators, std::size_t nvars);

/// Remainder of full multivariate division by the given list.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Finite set of derivatives with the lex order induced by a ranking, or by an
/// explicit variable order. Variable 0 is the heaviest.
class FiniteRing {
 public:
  FiniteRing() = default;
  /// Deduplicates and sorts descending by the ranking.
  FiniteRing(std::vector<DiffVariable> variables, const Ranking& ranking);
  /// Keeps the given order (heaviest first), e.g. for block elimination.
  static FiniteRing with_order(std::vector<DiffVariable> ordered, BasisPtr basis);

  std::size_t size() const { return variables_.size(); }
  const std::vector<DiffVariable>& variables() const { return variables_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  std::optional<std::size_t> index_of(const DiffVariable& v) const;
  bool contains(const DiffVariable& v) const { return index_of(v).has_value(); }

  /// Throws std::invalid_argument when f uses a derivative outside the ring.
  Polynomial from_diff(const DiffPolynomial& f) const;
  DiffPolynomial to_diff(const Polynomial& p) const;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.variables_ == b.variables_;
  }

 private:
  std::vector<DiffVariable> variables_;
  std::vector<std::pair<DiffVariable, std::size_t>> lookup_;  // sorted by canonical key
  BasisPtr basis_;
};

struct GroebnerBasis {
  FiniteRing ring;
  std::vector<Polynomial> generators;

  std::vector<DiffPolynomial> diff_generators() const;
  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.ring == b.ring && a.generators == b.generators;
  }
};

GroebnerBasis groebner_basis(const std::vector<DiffPolynomial>& F, const FiniteRing& ring);
GroebnerBasis groebner_basis(std::vector<Polynomial> F, const FiniteRing& ring);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
DiffPolynomial normal_form(const DiffPolynomial& f, const GroebnerBasis& G);
bool contains(const GroebnerBasis& G, const DiffPolynomial& f);

/// GB of I intersected with k[keep]; the result ring lists keep in the
/// original order.
GroebnerBasis eliminate(const GroebnerBasis& G, const std::vector<DiffVariable>& keep);
/// I : f^infinity via a tag variable ranked above the ring.
GroebnerBasis saturate(const std::vector<DiffPolynomial>& I, const DiffPolynomial& f,
                       const FiniteRing& ring);
GroebnerBasis saturate(const GroebnerBasis& I, const Polynomial& f);
/// I : (prod S)^infinity.
GroebnerBasis saturate_multi(const std::vector<DiffPolynomial>& I,
                             const std::vector<DiffPolynomial>& S, const FiniteRing& ring);
GroebnerBasis intersect(const GroebnerBasis& I, const GroebnerBasis& J);
bool is_trivial(const GroebnerBasis& G);
/// Same ideal: equal reduced bases.
bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b);

/// Smallest ring containing every derivative of the given polynomials.
FiniteRing ring_of(const std::vector<DiffPolynomial>& polys, const Ranking& ranking);

}  // namespace kolchin::algebra
