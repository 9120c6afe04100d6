#pragma once

#include "kolchin/algebra.hpp"
#include "kolchin/errors.hpp"
#include "kolchin/reduction.hpp"

#include <vector>

namespace kolchin {

/// A coherent autoreduced set with inequations containing its initials and
/// separants.
struct RegularSystem {
  AutoreducedSet chain;
  std::vector<DiffPolynomial> inequations;
};

/// [C] : H_C^infinity with C its characteristic set.
struct Component {
  AutoreducedSet charset;
  std::vector<DiffPolynomial> multipliers;  // H_C, non-constant part

  RegularSystem system() const { return {charset, multipliers}; }
};

struct CharDecomposition {
  std::vector<Component> components;
  std::optional<Ranking> ranking;

  bool unit_ideal() const { return components.empty(); }
};

struct DecompositionOptions {
  /// Worker threads for independent branches; 0 or 1 runs sequentially.
  unsigned threads = 1;
  /// Bound on characterizability re-splits before giving up.
  std::size_t max_splits = 64;
  /// Reverses the order in which equations of equal rank are picked.
  bool reverse_ties = false;
};

/// Rosenfeld-Groebner splitting followed by conversion of every regular
/// system into characterizable components. Components are sorted by set
/// rank; an empty list means {F} = (1).
CharDecomposition chi_decomposition(const std::vector<DiffPolynomial>& F, const Ranking& r,
                                    const DecompositionOptions& options = {});

/// (A) : H^infinity in the smallest ring holding A, H and extra.
algebra::GroebnerBasis algebraic_saturation(const AutoreducedSet& A,
                                            const std::vector<DiffPolynomial>& H,
                                            const std::vector<DiffPolynomial>& extra = {});

/// g in [A] : H^infinity, decided through Rosenfeld's lemma.
bool regular_membership(const DiffPolynomial& g, const RegularSystem& system);

struct MembershipResult {
  bool member = true;
  std::vector<bool> per_component;
};
MembershipResult radical_membership(const DiffPolynomial& f, const CharDecomposition& D);

/// 1 not in [C] : H_C^infinity. Throws std::invalid_argument for incoherent C.
bool component_is_consistent(const AutoreducedSet& C);

/// Makes the ranked leading coefficient 1 by a base-field scaling.
DiffPolynomial normalize(const DiffPolynomial& f, const Ranking& r);

}  // namespace kolchin
