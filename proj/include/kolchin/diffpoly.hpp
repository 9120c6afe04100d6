#pragma once

#include "kolchin/scalar.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kolchin {

inline constexpr std::size_t kMaxDerivations = 6;

/// theta = d1^k1 ... dm^km, an element of the free commutative monoid on the
/// derivations.
struct DerivativeOperator {
  std::array<std::uint8_t, kMaxDerivations> exponents{};

  static DerivativeOperator delta(int derivation);
  static DerivativeOperator from_exponents(const std::vector<int>& exponents);

  int order() const;
  bool is_identity() const { return order() == 0; }
  bool divides(const DerivativeOperator& other) const;
  /// this / other; requires other.divides(*this).
  DerivativeOperator quotient(const DerivativeOperator& other) const;
  DerivativeOperator lcm(const DerivativeOperator& other) const;
  DerivativeOperator operator*(const DerivativeOperator& other) const;

  auto operator<=>(const DerivativeOperator&) const = default;
};

/// A derivative theta*y_j. The defaulted ordering is the ranking-independent
/// canonical key (indeterminate first, then exponents).
struct DiffVariable {
  std::uint16_t indeterminate = 0;
  DerivativeOperator op;

  DiffVariable() = default;
  DiffVariable(int indeterminate_index, DerivativeOperator theta = {})
      : indeterminate(static_cast<std::uint16_t>(indeterminate_index)), op(theta) {}

  int order() const { return op.order(); }
  DiffVariable derived(const DerivativeOperator& theta) const { return {indeterminate, op * theta}; }
  /// True iff this == theta * base for some theta (identity allowed).
  bool is_derivative_of(const DiffVariable& base) const;
  bool is_proper_derivative_of(const DiffVariable& base) const;

  auto operator<=>(const DiffVariable&) const = default;
};

class DerivationBasis;
using BasisPtr = std::shared_ptr<const DerivationBasis>;

/// Derivations, differential indeterminates and the transcendental generators
/// of the base field with their derivative table.
class DerivationBasis {
 public:
  /// table[g][d] is the derivative of generator g by derivation d; an empty
  /// table means every generator is a constant.
  DerivationBasis(std::vector<std::string> derivations, std::vector<std::string> indeterminates,
                  std::vector<std::string> transcendentals = {},
                  std::vector<std::vector<Scalar>> table = {});

  static BasisPtr make(std::vector<std::string> derivations,
                       std::vector<std::string> indeterminates,
                       std::vector<std::string> transcendentals = {},
                       std::vector<std::vector<Scalar>> table = {});

  int derivation_count() const { return static_cast<int>(derivations_.size()); }
  int indeterminate_count() const { return static_cast<int>(indeterminates_.size()); }
  int transcendental_count() const { return static_cast<int>(transcendentals_.size()); }
  bool is_ordinary() const { return derivations_.size() == 1; }

  const std::vector<std::string>& derivations() const { return derivations_; }
  const std::vector<std::string>& indeterminates() const { return indeterminates_; }
  const std::vector<std::string>& transcendentals() const { return transcendentals_; }
  const Scalar& generator_derivative(int generator, int derivation) const {
    return table_[static_cast<std::size_t>(generator)][static_cast<std::size_t>(derivation)];
  }

  int indeterminate_index(const std::string& name) const;
  int derivation_index(const std::string& name) const;
  int transcendental_index(const std::string& name) const;
  bool valid(const DiffVariable& v) const;

  Scalar differentiate(const Scalar& s, int derivation) const;

 private:
  std::vector<std::string> derivations_;
  std::vector<std::string> indeterminates_;
  std::vector<std::string> transcendentals_;
  std::vector<std::vector<Scalar>> table_;
};

/// Power product of derivatives, sorted by the canonical DiffVariable key.
using DiffMonomial = std::vector<std::pair<DiffVariable, unsigned>>;

class DiffPolynomial {
 public:
  struct Term {
    DiffMonomial monomial;
    Scalar coefficient;
  };

  DiffPolynomial() = default;
  DiffPolynomial(long value);  // NOLINT(google-explicit-constructor)
  explicit DiffPolynomial(const Scalar& value);

  static DiffPolynomial variable(const DiffVariable& v, unsigned exponent = 1);
  static DiffPolynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }

  /// Distinct derivatives occurring, canonical order.
  std::vector<DiffVariable> variables() const;
  bool contains(const DiffVariable& v) const;
  unsigned degree(const DiffVariable& v) const;
  /// c[k] is the coefficient of v^k.
  std::vector<DiffPolynomial> coefficients(const DiffVariable& v) const;
  DiffPolynomial partial_derivative(const DiffVariable& v) const;

  /// Maximal order of a derivative in f (0 for constants).
  int order() const;
  /// Maximal order among derivatives of y, or -1 if y does not occur.
  int order(int indeterminate) const;

  DiffPolynomial differentiate(int derivation, const DerivationBasis& basis) const;
  DiffPolynomial apply(const DerivativeOperator& theta, const DerivationBasis& basis) const;

  DiffPolynomial scaled(const Scalar& c) const;
  DiffPolynomial pow(unsigned exponent) const;
  DiffPolynomial operator-() const;
  DiffPolynomial& operator+=(const DiffPolynomial& other);
  DiffPolynomial& operator-=(const DiffPolynomial& other);
  DiffPolynomial& operator*=(const DiffPolynomial& other);
  friend DiffPolynomial operator+(DiffPolynomial a, const DiffPolynomial& b) { return a += b; }
  friend DiffPolynomial operator-(DiffPolynomial a, const DiffPolynomial& b) { return a -= b; }
  friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b);
  friend bool operator==(const DiffPolynomial& a, const DiffPolynomial& b);

 private:
  std::vector<Term> terms_;
};

std::strong_ordering canonical_compare(const DiffPolynomial& a, const DiffPolynomial& b);

enum class RankingKind { orderly, elimination, block };

/// Completion of equal-order comparisons between derivatives of one
/// indeterminate: lex makes earlier derivations heavier, revlex later ones.
enum class TieBreak { lex, revlex };

class Ranking {
 public:
  /// priority lists indeterminate indices from lowest to highest; blocks
  /// (block kind only) are listed from lowest to highest as well.
  Ranking(BasisPtr basis, RankingKind kind, std::vector<int> priority,
          TieBreak tie_break = TieBreak::lex, std::vector<std::vector<int>> blocks = {});

  /// Declaration order as priority.
  static Ranking orderly(BasisPtr basis, TieBreak tie_break = TieBreak::lex);
  static Ranking elimination(BasisPtr basis, TieBreak tie_break = TieBreak::lex);

  std::strong_ordering compare(const DiffVariable& u, const DiffVariable& v) const;
  bool less(const DiffVariable& u, const DiffVariable& v) const { return compare(u, v) < 0; }

  RankingKind kind() const { return kind_; }
  bool is_orderly() const { return kind_ == RankingKind::orderly; }
  TieBreak tie_break() const { return tie_break_; }
  const std::vector<int>& priority() const { return priority_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const DerivationBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }

  /// Orderly ranking sharing basis, priority and tie-break.
  Ranking orderly_companion() const;

  DiffVariable leader(const DiffPolynomial& f) const;
  void sort_descending(std::vector<DiffVariable>& vars) const;

 private:
  std::strong_ordering compare_exponents(const DerivativeOperator& a,
                                         const DerivativeOperator& b) const;

  BasisPtr basis_;
  RankingKind kind_;
  std::vector<int> priority_;
  TieBreak tie_break_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> position_;  // indeterminate -> position in priority
  std::vector<int> block_of_;  // indeterminate -> block index
};

std::strong_ordering compare_derivatives(const Ranking& r, const DiffVariable& u,
                                         const DiffVariable& v);

struct LeaderDecomposition {
  DiffVariable leader;
  unsigned degree = 0;
  DiffPolynomial initial;
  DiffPolynomial separant;
};

/// Throws std::invalid_argument("no leader") for base-field elements.
LeaderDecomposition decompose_by_leader(const DiffPolynomial& f, const Ranking& r);

/// Rank (leader, degree); constants have no rank and sit below everything.
struct Rank {
  std::optional<DiffVariable> leader;
  unsigned degree = 0;
};
Rank rank_of(const DiffPolynomial& f, const Ranking& r);
std::strong_ordering compare_rank(const Ranking& r, const Rank& a, const Rank& b);
std::strong_ordering poly_rank_compare(const Ranking& r, const DiffPolynomial& f,
                                       const DiffPolynomial& g);

/// Throws for f == 0.
int order_query(const DiffPolynomial& f, std::optional<int> indeterminate = std::nullopt);

/// Canonical text. Terms descend by the ranking, factors inside a monomial
/// likewise; '*' and '^' are explicit.
std::string to_string(const DiffPolynomial& f, const Ranking& r);
std::string to_string(const DiffVariable& v, const DerivationBasis& basis);
std::string to_string(const Scalar& s, const DerivationBasis& basis);

}  // namespace kolchin
