#pragma once

#include "kolchin/diffpoly.hpp"

#include <optional>
#include <vector>

namespace kolchin {

/// Which reduction notion governs an autoreduced set: differential (no
/// proper derivatives of leaders, degree bound) or purely algebraic (degree
/// bound only).
enum class ReductionMode { differential, algebraic };

enum class ReductionStatus { reduced, partially_reduced_only, unreduced };

ReductionStatus reduction_status(const DiffPolynomial& f, const DiffPolynomial& g, const Ranking& r);
bool is_reduced(const DiffPolynomial& f, const DiffPolynomial& g, const Ranking& r,
                ReductionMode mode = ReductionMode::differential);

/// Deterministic order used among rank-equal candidates: compares term lists
/// under the lex order induced by the ranking (smaller leading monomial
/// first), then canonically.
std::strong_ordering ranked_compare(const Ranking& r, const DiffPolynomial& f,
                                    const DiffPolynomial& g);

/// Coefficient of the leading term under the ranking-induced lex order.
Scalar ranked_leading_coefficient(const DiffPolynomial& f, const Ranking& r);

class AutoreducedSet {
 public:
  AutoreducedSet() = default;
  /// Sorts by increasing rank and validates; throws std::invalid_argument.
  AutoreducedSet(std::vector<DiffPolynomial> elements, const Ranking& ranking,
                 ReductionMode mode = ReductionMode::differential);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<DiffPolynomial>& elements() const { return elements_; }
  const DiffPolynomial& operator[](std::size_t i) const { return elements_[i]; }
  const Ranking& ranking() const { return *ranking_; }
  ReductionMode mode() const { return mode_; }

  const LeaderDecomposition& info(std::size_t i) const { return info_[i]; }
  std::vector<DiffVariable> leaders() const;
  std::vector<Rank> ranks() const;
  DiffPolynomial initial_product() const;
  DiffPolynomial separant_product() const;
  DiffPolynomial h_product() const;
  /// Non-constant initials and separants, deduplicated.
  std::vector<DiffPolynomial> h_set() const;
  std::vector<DiffPolynomial> initial_set() const;

 private:
  std::vector<DiffPolynomial> elements_;
  std::vector<LeaderDecomposition> info_;
  std::optional<Ranking> ranking_;
  ReductionMode mode_ = ReductionMode::differential;
};

struct LedgerEntry {
  DerivativeOperator theta;
  std::size_t element = 0;
  DiffPolynomial quotient;
  /// Exponents of I_i then S_i that still multiply the quotient in the final
  /// identity (initials first, then separants).
  std::vector<unsigned> scale;
};

/// multiplier * f = sum(quotient * theta(A_i)) + remainder.
struct ReductionCertificate {
  std::vector<unsigned> initial_exponents;
  std::vector<unsigned> separant_exponents;
  std::vector<LedgerEntry> ledger;
  DiffPolynomial remainder;

  DiffPolynomial multiplier(const AutoreducedSet& A) const;
  DiffPolynomial expanded_quotient(std::size_t k, const AutoreducedSet& A) const;
  /// Expands the identity; true iff it holds exactly.
  bool verify(const DiffPolynomial& f, const AutoreducedSet& A) const;
};

ReductionCertificate partial_remainder(const DiffPolynomial& f, const AutoreducedSet& A);
ReductionCertificate full_remainder(const DiffPolynomial& f, const AutoreducedSet& A);
/// Pseudo-division by the elements only, no prolongation.
ReductionCertificate algebraic_remainder(const DiffPolynomial& f, const AutoreducedSet& A);

/// Greedy lowest-rank autoreduced subset. Throws if every element is constant.
AutoreducedSet basic_set(const std::vector<DiffPolynomial>& F, const Ranking& r,
                         ReductionMode mode = ReductionMode::differential);

std::strong_ordering set_rank_compare(const AutoreducedSet& A, const AutoreducedSet& B);

struct DeltaPair {
  std::size_t i = 0;
  std::size_t j = 0;
  DiffVariable common;
  DerivativeOperator psi;  // common = psi * u_i
  DerivativeOperator phi;  // common = phi * u_j
  DiffPolynomial polynomial;
};

/// None when the leaders are derivatives of different indeterminates.
std::optional<DeltaPair> delta_polynomial(const AutoreducedSet& A, std::size_t i, std::size_t j);
std::vector<DeltaPair> delta_pairs(const AutoreducedSet& A);

struct CoherenceResult {
  bool coherent = true;
  std::optional<DeltaPair> witness;
};

/// Decides S_j psi A_i - S_i phi A_j in (A_v) : H_A^infinity for every pair.
CoherenceResult coherence_check(const AutoreducedSet& A);

}  // namespace kolchin
