#include "kolchin/diffpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace kolchin {

Ranking::Ranking(BasisPtr basis, RankingKind kind, std::vector<int> priority, TieBreak tie_break,
                 std::vector<std::vector<int>> blocks)
    : basis_(std::move(basis)),
      kind_(kind),
      priority_(std::move(priority)),
      tie_break_(tie_break),
      blocks_(std::move(blocks)) {
  if (!basis_) throw std::invalid_argument("ranking without basis");
  const int n = basis_->indeterminate_count();
  if (static_cast<int>(priority_.size()) != n) {
    throw std::invalid_argument("ranking priority must list every indeterminate once");
  }
  position_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    const int y = priority_[i];
    if (y < 0 || y >= n || position_[static_cast<std::size_t>(y)] != -1) {
      throw std::invalid_argument("ranking priority must list every indeterminate once");
    }
    position_[static_cast<std::size_t>(y)] = static_cast<int>(i);
  }
  block_of_.assign(static_cast<std::size_t>(n), 0);
  if (kind_ == RankingKind::block) {
    if (blocks_.empty()) throw std::invalid_argument("block ranking without blocks");
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b].empty()) throw std::invalid_argument("empty ranking block");
      for (int y : blocks_[b]) {
        if (y < 0 || y >= n || seen[static_cast<std::size_t>(y)]++) {
          throw std::invalid_argument("ranking blocks must partition the indeterminates");
        }
        block_of_[static_cast<std::size_t>(y)] = static_cast<int>(b);
      }
    }
    if (std::count(seen.begin(), seen.end(), 0) != 0) {
      throw std::invalid_argument("ranking blocks must partition the indeterminates");
    }
  } else if (!blocks_.empty()) {
    throw std::invalid_argument("blocks given for a non-block ranking");
  }
}

namespace {
std::vector<int> declaration_order(const BasisPtr& basis) {
  std::vector<int> p(static_cast<std::size_t>(basis->indeterminate_count()));
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
  return p;
}
}  // namespace

Ranking Ranking::orderly(BasisPtr basis, TieBreak tie_break) {
  auto p = declaration_order(basis);
  return {std::move(basis), RankingKind::orderly, std::move(p), tie_break};
}

Ranking Ranking::elimination(BasisPtr basis, TieBreak tie_break) {
  auto p = declaration_order(basis);
  return {std::move(basis), RankingKind::elimination, std::move(p), tie_break};
}

Ranking Ranking::orderly_companion() const {
  return {basis_, RankingKind::orderly, priority_, tie_break_};
}

std::strong_ordering Ranking::compare_exponents(const DerivativeOperator& a,
                                                const DerivativeOperator& b) const {
  const int m = basis_->derivation_count();
  if (tie_break_ == TieBreak::lex) {
    for (int i = 0; i < m; ++i) {
      const auto k = static_cast<std::size_t>(i);
      if (a.exponents[k] != b.exponents[k]) return a.exponents[k] <=> b.exponents[k];
    }
  } else {
    for (int i = m - 1; i >= 0; --i) {
      const auto k = static_cast<std::size_t>(i);
      if (a.exponents[k] != b.exponents[k]) return a.exponents[k] <=> b.exponents[k];
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering Ranking::compare(const DiffVariable& u, const DiffVariable& v) const {
  const auto pu = position_[u.indeterminate];
  const auto pv = position_[v.indeterminate];
  switch (kind_) {
    case RankingKind::orderly:
      if (auto c = u.order() <=> v.order(); c != 0) return c;
      if (auto c = pu <=> pv; c != 0) return c;
      return compare_exponents(u.op, v.op);
    case RankingKind::elimination:
      if (auto c = pu <=> pv; c != 0) return c;
      if (auto c = u.order() <=> v.order(); c != 0) return c;
      return compare_exponents(u.op, v.op);
    case RankingKind::block:
      if (auto c = block_of_[u.indeterminate] <=> block_of_[v.indeterminate]; c != 0) return c;
      if (auto c = u.order() <=> v.order(); c != 0) return c;
      if (auto c = pu <=> pv; c != 0) return c;
      return compare_exponents(u.op, v.op);
  }
  return std::strong_ordering::equal;
}

DiffVariable Ranking::leader(const DiffPolynomial& f) const {
  if (f.is_constant()) throw std::invalid_argument("no leader");
  bool have = false;
  DiffVariable best;
  for (const auto& t : f.terms()) {
    for (const auto& [v, e] : t.monomial) {
      if (!have || compare(v, best) > 0) {
        best = v;
        have = true;
      }
    }
  }
  return best;
}

void Ranking::sort_descending(std::vector<DiffVariable>& vars) const {
  std::sort(vars.begin(), vars.end(),
            [this](const DiffVariable& a, const DiffVariable& b) { return compare(a, b) > 0; });
}

std::strong_ordering compare_derivatives(const Ranking& r, const DiffVariable& u,
                                         const DiffVariable& v) {
  if (!r.basis().valid(u) || !r.basis().valid(v)) {
    throw std::invalid_argument("derivative does not belong to the ranking's basis");
  }
  return r.compare(u, v);
}

LeaderDecomposition decompose_by_leader(const DiffPolynomial& f, const Ranking& r) {
  LeaderDecomposition d;
  d.leader = r.leader(f);
  auto coeffs = f.coefficients(d.leader);
  d.degree = static_cast<unsigned>(coeffs.size() - 1);
  d.initial = std::move(coeffs.back());
  d.separant = f.partial_derivative(d.leader);
  return d;
}

Rank rank_of(const DiffPolynomial& f, const Ranking& r) {
  if (f.is_constant()) return {};
  Rank k;
  k.leader = r.leader(f);
  k.degree = f.degree(*k.leader);
  return k;
}

std::strong_ordering compare_rank(const Ranking& r, const Rank& a, const Rank& b) {
  if (!a.leader || !b.leader) return a.leader.has_value() <=> b.leader.has_value();
  if (auto c = r.compare(*a.leader, *b.leader); c != 0) return c;
  return a.degree <=> b.degree;
}

std::strong_ordering poly_rank_compare(const Ranking& r, const DiffPolynomial& f,
                                       const DiffPolynomial& g) {
  return compare_rank(r, rank_of(f, r), rank_of(g, r));
}

}  // namespace kolchin
