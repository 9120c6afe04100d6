#pragma once

#include "kolchin/algebra.hpp"
#include "kolchin/decomposition.hpp"
#include "kolchin/errors.hpp"
#include "kolchin/reduction.hpp"

#include <string>
#include <vector>

namespace kolchin {

enum class BoundMode { component_order_sum, max_element_order };

std::string to_string(BoundMode mode);

struct OrderBound {
  int value = 0;
  BoundMode mode = BoundMode::component_order_sum;
  std::size_t component = 0;  // index attaining the maximum
};

/// Throws MathError("unit ideal") on an empty decomposition.
OrderBound order_bound(const CharDecomposition& D, BoundMode mode);

/// All derivatives of order <= h, sorted descending by the ranking.
algebra::FiniteRing order_ring(const Ranking& r, int h);

struct Prolongation {
  algebra::GroebnerBasis ideal;
  std::size_t prolongations = 0;  // non-identity theta used
};

/// (theta C_j : ord theta u_j <= h) : H_C^infinity inside ring. The
/// component's ranking must be orderly.
Prolongation prolong_saturate(const Component& component, int h, const algebra::FiniteRing& ring);
Prolongation prolong_saturate(const Component& component, int h);

/// Left fold of algebra::intersect; throws on an empty list or ring mismatch.
algebra::GroebnerBasis intersect_components(const std::vector<algebra::GroebnerBasis>& ideals);

/// Lowest-rank algebraically autoreduced subset of a proper ideal, certified
/// against its Groebner basis. Throws MathError when certification fails.
AutoreducedSet algebraic_charset(const algebra::GroebnerBasis& ideal, const Ranking& r);

/// Greedy lowest-rank differentially autoreduced subset.
AutoreducedSet lowest_diff_autoreduced_subset(const AutoreducedSet& C);

struct VerificationReport {
  bool autoreduced = false;         // (i)
  bool in_ideal = false;            // (ii)
  bool generators_reduce = false;   // (iii)
  bool leader_inclusion = false;    // (iv)
  bool consistent = false;          // (v)
  bool truncation = false;          // (vi)
  int truncation_order = -1;
  std::vector<std::string> failures;

  bool ordinary_ok() const { return autoreduced && in_ideal && generators_reduce && truncation; }
  bool all_ok() const {
    return ordinary_ok() && leader_inclusion && consistent;
  }
};

/// Checks (i)-(v) and, for (vi), that every generator of I intersected with
/// the order-h_check ring reduces to zero, h_check = max(min_truncation,
/// sum bound of an orderly decomposition of F).
VerificationReport verify_charset(const AutoreducedSet& C, const std::vector<DiffPolynomial>& F,
                                  const CharDecomposition& D, int min_truncation = 0,
                                  const DecompositionOptions& options = {});

class VerificationError : public MathError {
 public:
  explicit VerificationError(VerificationReport report);
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

struct CharsetCertificate {
  std::string algorithm;
  OrderBound bound;
  std::size_t ring_dimension = 0;
  std::size_t prolongations = 0;
  std::size_t components = 0;
  algebra::GroebnerBasis intersection;
  VerificationReport verification;
};

struct CharsetResult {
  AutoreducedSet charset;
  CharsetCertificate certificate;
  CharDecomposition decomposition;
};

struct CharsetOptions {
  DecompositionOptions decomposition;
  /// Worker threads for per-component prolongation.
  unsigned threads = 1;
};

/// Ordinary case, orderly ranking, sum-mode bound.
CharsetResult charset_ordinary(const std::vector<DiffPolynomial>& F, const Ranking& r,
                               const CharsetOptions& options = {});

/// Consistency-property case, max-mode bound, any ranking.
CharsetResult charset_consistent(const std::vector<DiffPolynomial>& F, const Ranking& r,
                                 const CharsetOptions& options = {});

}  // namespace kolchin
