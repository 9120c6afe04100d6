#pragma once

#include "kolchin/diffpoly.hpp"
#include "kolchin/parse.hpp"
#include "kolchin/reduction.hpp"

#include <initializer_list>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace fixtures {

using namespace kolchin;

/// Q(t){x, y, z} with t' = 1.
inline BasisPtr xyz_over_t() {
  return DerivationBasis::make({"d"}, {"x", "y", "z"}, {"t"}, {{Scalar(1)}});
}

inline BasisPtr ordinary(std::vector<std::string> indeterminates) {
  return DerivationBasis::make({"d"}, std::move(indeterminates));
}

/// Derivations x, y acting on u, v.
inline BasisPtr partial_uv() { return DerivationBasis::make({"x", "y"}, {"u", "v"}); }

inline DiffPolynomial P(const BasisPtr& basis, const std::string& text) {
  return parse_polynomial(text, *basis);
}

inline std::vector<DiffPolynomial> Ps(const BasisPtr& basis, std::initializer_list<const char*> texts) {
  std::vector<DiffPolynomial> out;
  for (const char* t : texts) out.push_back(P(basis, t));
  return out;
}

inline std::set<DiffVariable> leader_set(const AutoreducedSet& A) {
  const auto l = A.leaders();
  return {l.begin(), l.end()};
}

inline bool rank_equal(const AutoreducedSet& A, const AutoreducedSet& B) {
  return set_rank_compare(A, B) == 0;
}

inline std::optional<AutoreducedSet> try_autoreduced(std::vector<DiffPolynomial> elements, const Ranking& r,
                                                     ReductionMode mode = ReductionMode::differential) {
  try {
    return AutoreducedSet(std::move(elements), r, mode);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

/// theta(f) by repeated single derivations.
inline DiffPolynomial apply_by_steps(DiffPolynomial f, const DerivativeOperator& theta,
                                     const DerivationBasis& basis) {
  for (int d = 0; d < basis.derivation_count(); ++d) {
    for (int k = 0; k < theta.exponents[static_cast<std::size_t>(d)]; ++k) f = f.differentiate(d, basis);
  }
  return f;
}

/// multiplier*f - sum(q * theta A_i), rebuilt from the raw certificate with
/// initials and separants recomputed here.
inline DiffPolynomial expand_identity(const ReductionCertificate& cert, const DiffPolynomial& f,
                                      const AutoreducedSet& A) {
  const Ranking& r = A.ranking();
  const auto& basis = r.basis();
  const std::size_t n = A.size();
  std::vector<DiffPolynomial> initials;
  std::vector<DiffPolynomial> separants;
  for (const auto& a : A.elements()) {
    const DiffVariable u = r.leader(a);
    initials.push_back(a.coefficients(u).back());
    separants.push_back(a.partial_derivative(u));
  }
  auto power = [](const DiffPolynomial& p, unsigned e) {
    DiffPolynomial out(1);
    for (unsigned k = 0; k < e; ++k) out *= p;
    return out;
  };
  DiffPolynomial lhs = f;
  for (std::size_t i = 0; i < n; ++i) {
    lhs *= power(initials[i], cert.initial_exponents[i]) * power(separants[i], cert.separant_exponents[i]);
  }
  for (const auto& e : cert.ledger) {
    DiffPolynomial q = e.quotient;
    for (std::size_t i = 0; i < n; ++i) q *= power(initials[i], e.scale[i]) * power(separants[i], e.scale[n + i]);
    lhs -= q * apply_by_steps(A[e.element], e.theta, basis);
  }
  return lhs;
}

/// Random dense-ish differential polynomial over Q.
struct RandomPolys {
  std::mt19937 rng;
  BasisPtr basis;
  int max_order = 2;
  unsigned max_degree = 3;
  int max_terms = 4;
  int coefficient_range = 5;
  std::vector<int> indeterminates;  // empty: all

  RandomPolys(unsigned seed, BasisPtr b) : rng(seed), basis(std::move(b)) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  DiffVariable derivative(int max_ord) {
    const int y = indeterminates.empty()
                      ? uniform(0, basis->indeterminate_count() - 1)
                      : indeterminates[static_cast<std::size_t>(
                            uniform(0, static_cast<int>(indeterminates.size()) - 1))];
    std::vector<int> exps(static_cast<std::size_t>(basis->derivation_count()), 0);
    const int order = uniform(0, max_ord);
    for (int k = 0; k < order; ++k) ++exps[static_cast<std::size_t>(uniform(0, basis->derivation_count() - 1))];
    return {y, DerivativeOperator::from_exponents(exps)};
  }

  DiffPolynomial monomial(unsigned degree) {
    DiffPolynomial m(1);
    for (unsigned k = 0; k < degree; ++k) m *= DiffPolynomial::variable(derivative(max_order));
    return m;
  }

  long coefficient() {
    long c = 0;
    while (c == 0) c = uniform(-coefficient_range, coefficient_range);
    return c;
  }

  DiffPolynomial poly() {
    DiffPolynomial f;
    const int terms = uniform(1, max_terms);
    for (int k = 0; k < terms; ++k) {
      f += monomial(static_cast<unsigned>(uniform(0, static_cast<int>(max_degree)))) * DiffPolynomial(coefficient());
    }
    return f;
  }

  /// Differentially (or algebraically) autoreduced set of the given size.
  AutoreducedSet autoreduced(const Ranking& r, std::size_t size,
                             ReductionMode mode = ReductionMode::differential) {
    for (;;) {
      std::vector<DiffPolynomial> elements;
      for (std::size_t k = 0; k < size; ++k) elements.push_back(nonconstant());
      if (auto A = try_autoreduced(std::move(elements), r, mode)) return *A;
    }
  }

  DiffPolynomial nonconstant() {
    for (;;) {
      auto f = poly();
      if (!f.is_constant()) return f;
    }
  }
};

}  // namespace fixtures
