#include "kolchin/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace kolchin::algebra {

FiniteRing::FiniteRing(std::vector<DiffVariable> variables, const Ranking& ranking)
    : basis_(ranking.basis_ptr()) {
  std::sort(variables.begin(), variables.end());
  variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
  ranking.sort_descending(variables);
  *this = with_order(std::move(variables), basis_);
}

FiniteRing FiniteRing::with_order(std::vector<DiffVariable> ordered, BasisPtr basis) {
  FiniteRing r;
  r.basis_ = std::move(basis);
  r.variables_ = std::move(ordered);
  for (std::size_t i = 0; i < r.variables_.size(); ++i) r.lookup_.emplace_back(r.variables_[i], i);
  std::sort(r.lookup_.begin(), r.lookup_.end());
  for (std::size_t i = 1; i < r.lookup_.size(); ++i) {
    if (r.lookup_[i].first == r.lookup_[i - 1].first) {
      throw std::invalid_argument("duplicate ring variable");
    }
  }
  return r;
}

std::optional<std::size_t> FiniteRing::index_of(const DiffVariable& v) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), v,
                             [](const auto& entry, const DiffVariable& key) { return entry.first < key; });
  if (it == lookup_.end() || it->first != v) return std::nullopt;
  return it->second;
}

Polynomial FiniteRing::from_diff(const DiffPolynomial& f) const {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Exponents e(variables_.size(), 0);
    for (const auto& [v, k] : t.monomial) {
      const auto idx = index_of(v);
      if (!idx) throw std::invalid_argument("polynomial uses a derivative outside the ring");
      e[*idx] = static_cast<std::uint16_t>(k);
    }
    terms.push_back({std::move(e), t.coefficient});
  }
  return Polynomial::from_terms(variables_.size(), std::move(terms));
}

DiffPolynomial FiniteRing::to_diff(const Polynomial& p) const {
  std::vector<DiffPolynomial::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    DiffMonomial m;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] != 0) m.emplace_back(variables_.at(i), t.exponents[i]);
    }
    std::sort(m.begin(), m.end());
    terms.push_back({std::move(m), t.coefficient});
  }
  return DiffPolynomial::from_terms(std::move(terms));
}

std::vector<DiffPolynomial> GroebnerBasis::diff_generators() const {
  std::vector<DiffPolynomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(ring.to_diff(g));
  return out;
}

GroebnerBasis groebner_basis(const std::vector<DiffPolynomial>& F, const FiniteRing& ring) {
  std::vector<Polynomial> polys;
  polys.reserve(F.size());
  for (const auto& f : F) polys.push_back(ring.from_diff(f));
  return groebner_basis(std::move(polys), ring);
}

GroebnerBasis groebner_basis(std::vector<Polynomial> F, const FiniteRing& ring) {
  return {ring, buchberger(std::move(F), ring.size())};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (f.nvars() != G.ring.size() && !f.is_zero()) throw std::invalid_argument("ring mismatch");
  return reduce(f, G.generators);
}

DiffPolynomial normal_form(const DiffPolynomial& f, const GroebnerBasis& G) {
  return G.ring.to_diff(reduce(G.ring.from_diff(f), G.generators));
}

bool contains(const GroebnerBasis& G, const DiffPolynomial& f) {
  for (const auto& v : f.variables()) {
    if (!G.ring.contains(v)) {
      // Outside the ring: f lies in the extended ideal iff each coefficient in
      // the foreign derivative does.
      for (const auto& c : f.coefficients(v)) {
        if (!contains(G, c)) return false;
      }
      return true;
    }
  }
  return normal_form(G.ring.from_diff(f), G).is_zero();
}

namespace {

// Keeps the elements free of the first k variables and drops those variables.
std::vector<Polynomial> truncate(const std::vector<Polynomial>& gb, std::size_t k) {
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    bool free = true;
    for (std::size_t i = 0; i < k && free; ++i) free = !g.involves(i);
    if (free) out.push_back(g.dropped(k));
  }
  return out;
}

}  // namespace

GroebnerBasis eliminate(const GroebnerBasis& G, const std::vector<DiffVariable>& keep) {
  const auto& vars = G.ring.variables();
  std::vector<bool> kept(vars.size(), false);
  for (const auto& v : keep) {
    if (auto idx = G.ring.index_of(v)) kept[*idx] = true;
  }
  std::vector<std::size_t> perm;
  std::vector<DiffVariable> kept_vars;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!kept[i]) perm.push_back(i);
  }
  const std::size_t eliminated = perm.size();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (kept[i]) {
      perm.push_back(i);
      kept_vars.push_back(vars[i]);
    }
  }
  FiniteRing out_ring = FiniteRing::with_order(kept_vars, G.ring.basis_ptr());
  if (eliminated == 0) return {out_ring, G.generators};
  bool prefix = true;
  for (std::size_t i = 0; i < perm.size(); ++i) prefix = prefix && perm[i] == i;
  if (prefix) return {out_ring, truncate(G.generators, eliminated)};
  std::vector<Polynomial> moved;
  moved.reserve(G.generators.size());
  for (const auto& g : G.generators) moved.push_back(g.permuted(perm));
  return {out_ring, truncate(buchberger(std::move(moved), vars.size()), eliminated)};
}

GroebnerBasis saturate(const GroebnerBasis& I, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  if (f.is_constant()) return I;
  if (I.generators.empty()) return I;
  const std::size_t n = I.ring.size();
  std::vector<Polynomial> gens;
  gens.reserve(I.generators.size() + 1);
  for (const auto& g : I.generators) gens.push_back(g.lifted(1));
  const Polynomial w = Polynomial::variable(n + 1, 0);
  gens.push_back(Polynomial::constant(n + 1, Scalar(1)) - w * f.lifted(1));
  return {I.ring, truncate(buchberger(std::move(gens), n + 1), 1)};
}

GroebnerBasis saturate(const std::vector<DiffPolynomial>& I, const DiffPolynomial& f,
                       const FiniteRing& ring) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  return saturate(groebner_basis(I, ring), ring.from_diff(f));
}

GroebnerBasis saturate_multi(const std::vector<DiffPolynomial>& I,
                             const std::vector<DiffPolynomial>& S, const FiniteRing& ring) {
  DiffPolynomial product(1);
  for (const auto& s : S) {
    if (s.is_zero()) throw std::invalid_argument("saturation by zero");
    if (!s.is_constant()) product *= s;
  }
  return saturate(groebner_basis(I, ring), ring.from_diff(product));
}

GroebnerBasis intersect(const GroebnerBasis& I, const GroebnerBasis& J) {
  if (!(I.ring == J.ring)) throw std::invalid_argument("intersection of ideals in different rings");
  if (is_trivial(I)) return J;
  if (is_trivial(J)) return I;
  if (I.generators.empty()) return I;
  if (J.generators.empty()) return J;
  const std::size_t n = I.ring.size();
  const Polynomial w = Polynomial::variable(n + 1, 0);
  const Polynomial one_minus_w = Polynomial::constant(n + 1, Scalar(1)) - w;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) gens.push_back(w * g.lifted(1));
  for (const auto& h : J.generators) gens.push_back(one_minus_w * h.lifted(1));
  return {I.ring, truncate(buchberger(std::move(gens), n + 1), 1)};
}

bool is_trivial(const GroebnerBasis& G) {
  return G.generators.size() == 1 && G.generators[0].is_constant() && !G.generators[0].is_zero();
}

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) { return a == b; }

FiniteRing ring_of(const std::vector<DiffPolynomial>& polys, const Ranking& ranking) {
  std::vector<DiffVariable> vars;
  for (const auto& p : polys) {
    auto v = p.variables();
    vars.insert(vars.end(), v.begin(), v.end());
  }
  return {std::move(vars), ranking};
}

}  // namespace kolchin::algebra
