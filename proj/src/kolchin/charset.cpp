#include "kolchin/kolchin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kolchin {

namespace {

constexpr int kCompletionRounds = 256;

using algebra::Exponents;
using algebra::Polynomial;

// Polynomial viewed over k(V)[U]: U-part exponents (the first nu variables)
// mapped to coefficients in k[V].
struct DescLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return algebra::lex_compare(a, b) > 0;
  }
};
using UPoly = std::map<Exponents, Polynomial, DescLex>;

UPoly split(const Polynomial& p, std::size_t nu) {
  UPoly out;
  for (const auto& t : p.terms()) {
    Exponents u(t.exponents.begin(), t.exponents.begin() + static_cast<std::ptrdiff_t>(nu));
    Exponents v = t.exponents;
    std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nu), 0);
    auto [it, fresh] = out.try_emplace(std::move(u), p.nvars());
    it->second = it->second + Polynomial::monomial(v, t.coefficient);
  }
  return out;
}

Exponents extend(const Exponents& u, std::size_t nvars) {
  Exponents e = u;
  e.resize(nvars, 0);
  return e;
}

struct Divisor {
  Exponents lead;
  Polynomial coefficient;
  UPoly body;
};

// lambda * f reduced to U-monomials outside the leading ideal.
void pseudo_normal_form(UPoly& f, Polynomial& lambda, const std::vector<Divisor>& G) {
  auto it = f.begin();
  while (it != f.end()) {
    const Divisor* d = nullptr;
    for (const auto& g : G) {
      if (algebra::divides(g.lead, it->first)) {
        d = &g;
        break;
      }
    }
    if (!d) {
      ++it;
      continue;
    }
    const Exponents m = it->first;
    const Exponents q = algebra::quotient(m, d->lead);
    const Polynomial c = it->second;
    for (auto& [key, coef] : f) coef = coef * d->coefficient;
    lambda = lambda * d->coefficient;
    for (const auto& [key, coef] : d->body) {
      Exponents target = key;
      for (std::size_t i = 0; i < target.size(); ++i) target[i] += q[i];
      auto [pos, fresh] = f.try_emplace(std::move(target), c.nvars());
      pos->second = pos->second - c * coef;
      if (pos->second.is_zero()) f.erase(pos);
    }
    it = f.lower_bound(m);
  }
}

void combine(UPoly& v, const Polynomial& a, const UPoly& w, const Polynomial& b) {
  for (auto& [key, coef] : v) coef = coef * a;
  for (const auto& [key, coef] : w) {
    auto [pos, fresh] = v.try_emplace(key, coef.nvars());
    pos->second = pos->second - b * coef;
    if (pos->second.is_zero()) v.erase(pos);
  }
  std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
}

constexpr std::size_t kMaxBox = 4096;

// Decides whether the ideal contains a nonzero element reduced w.r.t. B, i.e.
// whether the monomials u^e with e < d become dependent over k(V) modulo
// the ideal. Returns such an element, or nothing when B is certified.
std::optional<DiffPolynomial> reduced_witness(const algebra::GroebnerBasis& ideal,
                                              const AutoreducedSet& B) {
  const std::size_t n = ideal.ring.size();
  std::vector<std::size_t> lead_pos;
  std::vector<unsigned> bound;
  for (std::size_t i = 0; i < B.size(); ++i) {
    lead_pos.push_back(*ideal.ring.index_of(B.info(i).leader));
    bound.push_back(B.info(i).degree);
  }
  auto in_box = [&](const Exponents& lm) {
    for (std::size_t i = 0; i < lead_pos.size(); ++i) {
      if (lm[lead_pos[i]] >= bound[i]) return false;
    }
    return true;
  };
  if (std::none_of(ideal.generators.begin(), ideal.generators.end(),
                   [&](const Polynomial& g) { return in_box(g.leading_monomial()); })) {
    return std::nullopt;
  }

  // Block order: leaders (ring order) before the remaining variables.
  std::vector<std::size_t> perm;
  std::vector<std::size_t> order(lead_pos.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lead_pos[a] < lead_pos[b]; });
  std::vector<unsigned> ubound;
  for (auto i : order) {
    perm.push_back(lead_pos[i]);
    ubound.push_back(bound[i]);
  }
  const std::size_t nu = perm.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (std::find(perm.begin(), perm.end(), k) == perm.end()) perm.push_back(k);
  }
  std::vector<Polynomial> permuted;
  for (const auto& g : ideal.generators) permuted.push_back(g.permuted(perm));
  const auto block = algebra::buchberger(std::move(permuted), n);

  std::vector<Divisor> G;
  bool box_standard = true;
  for (const auto& g : block) {
    Divisor d;
    d.body = split(g, nu);
    d.lead = d.body.begin()->first;
    d.coefficient = d.body.begin()->second;
    bool small = true;
    for (std::size_t i = 0; i < nu; ++i) small = small && d.lead[i] < ubound[i];
    box_standard = box_standard && !small;
    G.push_back(std::move(d));
  }
  if (box_standard) return std::nullopt;

  std::vector<Exponents> box{Exponents(nu, 0)};
  for (std::size_t i = 0; i < nu; ++i) {
    std::vector<Exponents> next;
    for (const auto& e : box) {
      for (unsigned k = 0; k < ubound[i]; ++k) {
        Exponents x = e;
        x[i] = static_cast<std::uint16_t>(k);
        next.push_back(std::move(x));
      }
    }
    box = std::move(next);
    if (box.size() > kMaxBox) throw MathError("charset not certified: reduction box too large");
  }

  const Polynomial one = Polynomial::constant(n, Scalar(1));
  const Polynomial zero(n);
  struct Row {
    UPoly vector;
    Exponents pivot;
    std::vector<Polynomial> combination;
  };
  std::vector<Row> echelon;
  std::vector<Polynomial> lambda(box.size(), one);
  for (std::size_t e = 0; e < box.size(); ++e) {
    UPoly v;
    v.emplace(box[e], one);
    pseudo_normal_form(v, lambda[e], G);
    std::vector<Polynomial> comb(box.size(), zero);
    comb[e] = one;
    for (const auto& row : echelon) {
      auto hit = v.find(row.pivot);
      if (hit == v.end()) continue;
      const Polynomial a = row.vector.at(row.pivot);
      const Polynomial b = hit->second;
      combine(v, a, row.vector, b);
      for (std::size_t k = 0; k < comb.size(); ++k) comb[k] = comb[k] * a - b * row.combination[k];
    }
    if (v.empty()) {
      Polynomial w(n);
      for (std::size_t k = 0; k < comb.size(); ++k) {
        if (comb[k].is_zero()) continue;
        w = w + comb[k] * lambda[k] * Polynomial::monomial(extend(box[k], n), Scalar(1));
      }
      std::vector<std::size_t> inverse(n);
      for (std::size_t i = 0; i < n; ++i) inverse[perm[i]] = i;
      return ideal.ring.to_diff(w.permuted(inverse));
    }
    Exponents pivot = v.begin()->first;
    echelon.push_back({std::move(v), std::move(pivot), std::move(comb)});
  }
  return std::nullopt;
}

}  // namespace

AutoreducedSet algebraic_charset(const algebra::GroebnerBasis& ideal, const Ranking& r) {
  if (algebra::is_trivial(ideal)) throw MathError("unit ideal");
  if (ideal.generators.empty()) return AutoreducedSet({}, r, ReductionMode::algebraic);

  const auto gens = ideal.diff_generators();
  std::vector<DiffPolynomial> pool;
  for (const auto& g : gens) pool.push_back(normalize(g, r));

  for (int round = 0; round < kCompletionRounds; ++round) {
    const AutoreducedSet B = basic_set(pool, r, ReductionMode::algebraic);
    bool grown = false;
    for (const auto& g : gens) {
      const auto rem = algebraic_remainder(g, B).remainder;
      if (rem.is_zero()) continue;
      if (rem.is_constant()) throw std::logic_error("proper ideal produced a constant remainder");
      pool.push_back(normalize(rem, r));
      grown = true;
    }
    if (grown) continue;
    if (auto w = reduced_witness(ideal, B)) {
      if (w->is_constant()) throw std::logic_error("proper ideal produced a constant witness");
      pool.push_back(normalize(*w, r));
      continue;
    }
    std::vector<DiffPolynomial> out;
    for (const auto& b : B.elements()) out.push_back(normalize(b, r));
    return {std::move(out), r, ReductionMode::algebraic};
  }
  throw MathError("charset not certified: completion did not stabilize");
}

AutoreducedSet lowest_diff_autoreduced_subset(const AutoreducedSet& C) {
  if (C.empty()) throw std::invalid_argument("empty set");
  const Ranking& r = C.ranking();
  std::vector<DiffPolynomial> candidates = C.elements();
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&r](const DiffPolynomial& a, const DiffPolynomial& b) {
                     if (auto c = poly_rank_compare(r, a, b); c != 0) return c < 0;
                     return ranked_compare(r, a, b) < 0;
                   });
  std::vector<DiffPolynomial> chosen;
  for (const auto& f : candidates) {
    const bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const DiffPolynomial& g) {
      return is_reduced(f, g, r) && is_reduced(g, f, r);
    });
    if (ok) chosen.push_back(f);
  }
  return {std::move(chosen), r};
}

}  // namespace kolchin
