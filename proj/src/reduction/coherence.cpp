#include "kolchin/algebra.hpp"
#include "kolchin/reduction.hpp"

#include <stdexcept>

namespace kolchin {

std::optional<DeltaPair> delta_polynomial(const AutoreducedSet& A, std::size_t i, std::size_t j) {
  if (i == j || i >= A.size() || j >= A.size()) throw std::out_of_range("bad delta pair indices");
  const auto& ui = A.info(i).leader;
  const auto& uj = A.info(j).leader;
  if (ui.indeterminate != uj.indeterminate) return std::nullopt;
  const auto& basis = A.ranking().basis();
  DeltaPair d;
  d.i = i;
  d.j = j;
  d.common = DiffVariable(ui.indeterminate, ui.op.lcm(uj.op));
  d.psi = d.common.op.quotient(ui.op);
  d.phi = d.common.op.quotient(uj.op);
  d.polynomial = A.info(j).separant * A[i].apply(d.psi, basis) -
                 A.info(i).separant * A[j].apply(d.phi, basis);
  return d;
}

std::vector<DeltaPair> delta_pairs(const AutoreducedSet& A) {
  std::vector<DeltaPair> out;
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      if (auto d = delta_polynomial(A, i, j)) out.push_back(std::move(*d));
    }
  }
  return out;
}

namespace {

void operators_up_to(int m, int budget, std::size_t pos, DerivativeOperator& cur,
                     std::vector<DerivativeOperator>& out) {
  if (pos == static_cast<std::size_t>(m)) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= budget; ++k) {
    cur.exponents[pos] = static_cast<std::uint8_t>(k);
    operators_up_to(m, budget - k, pos + 1, cur, out);
  }
  cur.exponents[pos] = 0;
}

// Algebraic membership of delta in (theta A_k : theta u_k < v, ord <= ord v) : H^inf.
bool delta_in_saturation(const AutoreducedSet& A, const DeltaPair& d) {
  const Ranking& r = A.ranking();
  const auto& basis = r.basis();
  const int bound = d.common.order();
  std::vector<DiffPolynomial> gens;
  for (std::size_t k = 0; k < A.size(); ++k) {
    const auto& u = A.info(k).leader;
    std::vector<DerivativeOperator> ops;
    DerivativeOperator cur;
    operators_up_to(basis.derivation_count(), bound - u.order(), 0, cur, ops);
    for (const auto& theta : ops) {
      if (r.compare(u.derived(theta), d.common) < 0) gens.push_back(A[k].apply(theta, basis));
    }
  }
  const auto H = A.h_set();
  std::vector<DiffPolynomial> everything = gens;
  everything.insert(everything.end(), H.begin(), H.end());
  everything.push_back(d.polynomial);
  const auto ring = algebra::ring_of(everything, r);
  const auto sat = algebra::saturate_multi(gens, H, ring);
  return algebra::contains(sat, d.polynomial);
}

}  // namespace

CoherenceResult coherence_check(const AutoreducedSet& A) {
  for (auto& d : delta_pairs(A)) {
    if (d.polynomial.is_zero()) continue;
    if (full_remainder(d.polynomial, A).remainder.is_zero()) continue;
    if (delta_in_saturation(A, d)) continue;
    return {false, std::move(d)};
  }
  return {true, std::nullopt};
}

}  // namespace kolchin
