#include "kolchin/kolchin.hpp"

#include <stdexcept>

namespace kolchin {

std::string to_string(BoundMode mode) {
  return mode == BoundMode::component_order_sum ? "component_order_sum" : "max_element_order";
}

OrderBound order_bound(const CharDecomposition& D, BoundMode mode) {
  if (D.unit_ideal()) throw MathError("unit ideal");
  OrderBound bound;
  bound.mode = mode;
  for (std::size_t i = 0; i < D.components.size(); ++i) {
    int value = 0;
    for (const auto& c : D.components[i].charset.elements()) {
      value = mode == BoundMode::component_order_sum ? value + c.order()
                                                     : std::max(value, c.order());
    }
    if (i == 0 || value > bound.value) {
      bound.value = value;
      bound.component = i;
    }
  }
  return bound;
}

namespace {

void operators_of_order_at_most(int m, int budget, std::size_t pos, DerivativeOperator& cur,
                                std::vector<DerivativeOperator>& out) {
  if (pos == static_cast<std::size_t>(m)) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= budget; ++k) {
    cur.exponents[pos] = static_cast<std::uint8_t>(k);
    operators_of_order_at_most(m, budget - k, pos + 1, cur, out);
  }
  cur.exponents[pos] = 0;
}

std::vector<DerivativeOperator> operators_up_to(int m, int h) {
  std::vector<DerivativeOperator> ops;
  if (h < 0) return ops;
  DerivativeOperator cur;
  operators_of_order_at_most(m, h, 0, cur, ops);
  return ops;
}

}  // namespace

algebra::FiniteRing order_ring(const Ranking& r, int h) {
  if (h < 0) throw std::invalid_argument("negative order bound");
  const auto& basis = r.basis();
  const auto ops = operators_up_to(basis.derivation_count(), h);
  std::vector<DiffVariable> vars;
  for (int y = 0; y < basis.indeterminate_count(); ++y) {
    for (const auto& op : ops) vars.emplace_back(y, op);
  }
  return {std::move(vars), r};
}

Prolongation prolong_saturate(const Component& component, int h, const algebra::FiniteRing& ring) {
  const AutoreducedSet& C = component.charset;
  if (C.empty()) return {algebra::groebner_basis(std::vector<DiffPolynomial>{}, ring), 0};
  const Ranking& r = C.ranking();
  if (!r.is_orderly()) {
    throw std::invalid_argument("prolongation requires a decomposition under an orderly ranking");
  }
  Prolongation out;
  std::vector<DiffPolynomial> gens;
  const auto& basis = r.basis();
  for (std::size_t j = 0; j < C.size(); ++j) {
    const auto& u = C.info(j).leader;
    for (const auto& theta : operators_up_to(basis.derivation_count(), h - u.order())) {
      gens.push_back(C[j].apply(theta, basis));
      if (!theta.is_identity()) ++out.prolongations;
    }
  }
  auto G = algebra::groebner_basis(gens, ring);
  for (const auto& s : component.multipliers) {
    if (s.is_constant()) continue;
    if (algebra::is_trivial(G)) break;
    G = algebra::saturate(G, ring.from_diff(s));
  }
  out.ideal = std::move(G);
  return out;
}

Prolongation prolong_saturate(const Component& component, int h) {
  if (component.charset.empty()) throw std::invalid_argument("prolongation of an empty set");
  return prolong_saturate(component, h, order_ring(component.charset.ranking(), h));
}

algebra::GroebnerBasis intersect_components(const std::vector<algebra::GroebnerBasis>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  algebra::GroebnerBasis acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = algebra::intersect(acc, ideals[i]);
  return acc;
}

}  // namespace kolchin
