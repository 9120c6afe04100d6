#include "kolchin/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kolchin {

ReductionStatus reduction_status(const DiffPolynomial& f, const DiffPolynomial& g,
                                 const Ranking& r) {
  if (g.is_constant()) throw std::invalid_argument("reduction w.r.t. a constant");
  const auto d = decompose_by_leader(g, r);
  for (const auto& v : f.variables()) {
    if (v.is_proper_derivative_of(d.leader)) return ReductionStatus::unreduced;
  }
  return f.degree(d.leader) < d.degree ? ReductionStatus::reduced
                                       : ReductionStatus::partially_reduced_only;
}

bool is_reduced(const DiffPolynomial& f, const DiffPolynomial& g, const Ranking& r,
                ReductionMode mode) {
  if (mode == ReductionMode::differential) {
    return reduction_status(f, g, r) == ReductionStatus::reduced;
  }
  const auto d = decompose_by_leader(g, r);
  return f.degree(d.leader) < d.degree;
}

namespace {

struct RankedTerm {
  DiffMonomial monomial;  // descending by ranking
  const Scalar* coefficient;
};

std::vector<RankedTerm> ranked_terms(const DiffPolynomial& f, const Ranking& r) {
  std::vector<RankedTerm> rows;
  rows.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    RankedTerm row{t.monomial, &t.coefficient};
    std::sort(row.monomial.begin(), row.monomial.end(),
              [&r](const auto& a, const auto& b) { return r.compare(a.first, b.first) > 0; });
    rows.push_back(std::move(row));
  }
  return rows;
}

std::strong_ordering compare_monomials(const Ranking& r, const DiffMonomial& a,
                                       const DiffMonomial& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = r.compare(a[i].first, b[i].first); c != 0) return c;
    if (a[i].second != b[i].second) return a[i].second <=> b[i].second;
  }
  return a.size() <=> b.size();
}

}  // namespace

std::strong_ordering ranked_compare(const Ranking& r, const DiffPolynomial& f,
                                    const DiffPolynomial& g) {
  auto a = ranked_terms(f, r);
  auto b = ranked_terms(g, r);
  auto desc = [&r](const RankedTerm& x, const RankedTerm& y) {
    return compare_monomials(r, x.monomial, y.monomial) > 0;
  };
  std::sort(a.begin(), a.end(), desc);
  std::sort(b.begin(), b.end(), desc);
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare_monomials(r, a[i].monomial, b[i].monomial); c != 0) return c;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = canonical_compare(*a[i].coefficient, *b[i].coefficient); c != 0) return c;
  }
  return a.size() <=> b.size();
}

Scalar ranked_leading_coefficient(const DiffPolynomial& f, const Ranking& r) {
  if (f.is_zero()) throw std::invalid_argument("leading coefficient of zero");
  const auto rows = ranked_terms(f, r);
  const RankedTerm* best = &rows.front();
  for (const auto& row : rows) {
    if (compare_monomials(r, row.monomial, best->monomial) > 0) best = &row;
  }
  return *best->coefficient;
}

// ---------------------------------------------------------------------------

AutoreducedSet::AutoreducedSet(std::vector<DiffPolynomial> elements, const Ranking& ranking,
                               ReductionMode mode)
    : elements_(std::move(elements)), ranking_(ranking), mode_(mode) {
  for (const auto& e : elements_) {
    if (e.is_constant()) throw std::invalid_argument("autoreduced set contains a constant");
  }
  std::stable_sort(elements_.begin(), elements_.end(),
                   [&ranking](const DiffPolynomial& a, const DiffPolynomial& b) {
                     return poly_rank_compare(ranking, a, b) < 0;
                   });
  info_.reserve(elements_.size());
  for (const auto& e : elements_) info_.push_back(decompose_by_leader(e, ranking));
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = 0; j < elements_.size(); ++j) {
      if (i != j && !is_reduced(elements_[i], elements_[j], ranking, mode)) {
        throw std::invalid_argument("set is not autoreduced");
      }
    }
  }
}

std::vector<DiffVariable> AutoreducedSet::leaders() const {
  std::vector<DiffVariable> out;
  for (const auto& d : info_) out.push_back(d.leader);
  return out;
}

std::vector<Rank> AutoreducedSet::ranks() const {
  std::vector<Rank> out;
  for (const auto& d : info_) out.push_back({d.leader, d.degree});
  return out;
}

DiffPolynomial AutoreducedSet::initial_product() const {
  DiffPolynomial p(1);
  for (const auto& d : info_) p *= d.initial;
  return p;
}

DiffPolynomial AutoreducedSet::separant_product() const {
  DiffPolynomial p(1);
  for (const auto& d : info_) p *= d.separant;
  return p;
}

DiffPolynomial AutoreducedSet::h_product() const { return initial_product() * separant_product(); }

namespace {
void push_unique(std::vector<DiffPolynomial>& out, const DiffPolynomial& p) {
  if (p.is_constant()) return;
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
}
}  // namespace

std::vector<DiffPolynomial> AutoreducedSet::h_set() const {
  std::vector<DiffPolynomial> out;
  for (const auto& d : info_) {
    push_unique(out, d.initial);
    push_unique(out, d.separant);
  }
  return out;
}

std::vector<DiffPolynomial> AutoreducedSet::initial_set() const {
  std::vector<DiffPolynomial> out;
  for (const auto& d : info_) push_unique(out, d.initial);
  return out;
}

// ---------------------------------------------------------------------------

DiffPolynomial ReductionCertificate::multiplier(const AutoreducedSet& A) const {
  DiffPolynomial m(1);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (initial_exponents[i] != 0) m *= A.info(i).initial.pow(initial_exponents[i]);
    if (separant_exponents[i] != 0) m *= A.info(i).separant.pow(separant_exponents[i]);
  }
  return m;
}

DiffPolynomial ReductionCertificate::expanded_quotient(std::size_t k,
                                                       const AutoreducedSet& A) const {
  const auto& e = ledger.at(k);
  DiffPolynomial q = e.quotient;
  const std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (e.scale[i] != 0) q *= A.info(i).initial.pow(e.scale[i]);
    if (e.scale[n + i] != 0) q *= A.info(i).separant.pow(e.scale[n + i]);
  }
  return q;
}

bool ReductionCertificate::verify(const DiffPolynomial& f, const AutoreducedSet& A) const {
  const auto& basis = A.ranking().basis();
  DiffPolynomial lhs = multiplier(A) * f;
  std::map<std::pair<std::size_t, DerivativeOperator>, DiffPolynomial> cache;
  for (std::size_t k = 0; k < ledger.size(); ++k) {
    const auto& e = ledger[k];
    auto key = std::make_pair(e.element, e.theta);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, A[e.element].apply(e.theta, basis)).first;
    lhs -= expanded_quotient(k, A) * it->second;
  }
  return lhs == remainder;
}

namespace {

class Reducer {
 public:
  explicit Reducer(const AutoreducedSet& A) : A_(A), n_(A.size()) {
    cert_.initial_exponents.assign(n_, 0);
    cert_.separant_exponents.assign(n_, 0);
  }

  ReductionCertificate run(const DiffPolynomial& f, bool differential, bool algebraic) {
    r_ = f;
    if (differential) partial_phase();
    if (algebraic) algebraic_phase();
    for (auto& e : cert_.ledger) {
      for (std::size_t i = 0; i < n_; ++i) {
        e.scale[i] = cert_.initial_exponents[i] - e.scale[i];
        e.scale[n_ + i] = cert_.separant_exponents[i] - e.scale[n_ + i];
      }
    }
    cert_.remainder = std::move(r_);
    return std::move(cert_);
  }

 private:
  // scale temporarily holds the exponents at recording time.
  void record(const DerivativeOperator& theta, std::size_t i, DiffPolynomial q) {
    LedgerEntry e{theta, i, std::move(q), {}};
    e.scale.reserve(2 * n_);
    e.scale.insert(e.scale.end(), cert_.initial_exponents.begin(), cert_.initial_exponents.end());
    e.scale.insert(e.scale.end(), cert_.separant_exponents.begin(), cert_.separant_exponents.end());
    cert_.ledger.push_back(std::move(e));
  }

  const DiffPolynomial& prolongation(std::size_t i, const DerivativeOperator& theta) {
    auto key = std::make_pair(i, theta);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, A_[i].apply(theta, A_.ranking().basis())).first;
    }
    return it->second;
  }

  // top / lc when lc is a base-field element or top a base-field multiple
  // of lc.
  static std::optional<DiffPolynomial> exact_quotient(const DiffPolynomial& top,
                                                      const DiffPolynomial& lc) {
    if (lc.is_constant()) return top.scaled(lc.constant_value().inverse());
    if (top.terms().size() != lc.terms().size()) return std::nullopt;
    const Scalar c = top.terms()[0].coefficient / lc.terms()[0].coefficient;
    for (std::size_t k = 0; k < top.terms().size(); ++k) {
      if (top.terms()[k].monomial != lc.terms()[k].monomial ||
          !(top.terms()[k].coefficient == c * lc.terms()[k].coefficient)) {
        return std::nullopt;
      }
    }
    return DiffPolynomial(c);
  }

  // Eliminates c * v^e * P from the top of r where P has leading coefficient
  // lc in v; multiplies r by lc unless top is a base-field multiple of lc.
  void divide(const DiffVariable& v, unsigned target, const DiffPolynomial& P,
              const DiffPolynomial& lc, const DerivativeOperator& theta, std::size_t i,
              std::vector<unsigned>& exponents) {
    unsigned d = r_.degree(v);
    while (!r_.is_zero() && d >= target) {
      DiffPolynomial top = r_.coefficients(v)[d];
      const DiffPolynomial shift = DiffPolynomial::variable(v, d - target);
      DiffPolynomial q = top * shift;
      if (auto exact = exact_quotient(top, lc)) {
        q = *exact * shift;
        r_ -= q * P;
      } else {
        r_ = lc * r_ - q * P;
        ++exponents[i];
      }
      record(theta, i, std::move(q));
      const unsigned next = r_.degree(v);
      if (next >= d) throw std::logic_error("pseudo-division did not lower the degree");
      d = next;
    }
  }

  void partial_phase() {
    const Ranking& rk = A_.ranking();
    while (!r_.is_zero()) {
      std::optional<DiffVariable> best;
      std::size_t best_i = 0;
      for (const auto& v : r_.variables()) {
        for (std::size_t i = 0; i < n_; ++i) {
          if (!v.is_proper_derivative_of(A_.info(i).leader)) continue;
          if (!best || rk.compare(v, *best) > 0) {
            best = v;
            best_i = i;
          }
          break;  // lowest index wins for this v
        }
      }
      if (!best) return;
      const DerivativeOperator theta = best->op.quotient(A_.info(best_i).leader.op);
      const DiffPolynomial& P = prolongation(best_i, theta);
      const auto coeffs = P.coefficients(*best);
      if (coeffs.size() != 2) throw std::logic_error("prolongation is not linear in its leader");
      divide(*best, 1, P, coeffs[1], theta, best_i, cert_.separant_exponents);
    }
  }

  void algebraic_phase() {
    const Ranking& rk = A_.ranking();
    while (!r_.is_zero()) {
      std::optional<DiffVariable> best;
      std::size_t best_i = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        const auto& info = A_.info(i);
        if (r_.degree(info.leader) < info.degree) continue;
        if (!best || rk.compare(info.leader, *best) > 0) {
          best = info.leader;
          best_i = i;
        }
      }
      if (!best) return;
      const auto& info = A_.info(best_i);
      divide(info.leader, info.degree, A_[best_i], info.initial, DerivativeOperator{}, best_i,
             cert_.initial_exponents);
    }
  }

  const AutoreducedSet& A_;
  std::size_t n_;
  DiffPolynomial r_;
  ReductionCertificate cert_;
  std::map<std::pair<std::size_t, DerivativeOperator>, DiffPolynomial> cache_;
};

}  // namespace

ReductionCertificate partial_remainder(const DiffPolynomial& f, const AutoreducedSet& A) {
  return Reducer(A).run(f, true, false);
}

ReductionCertificate full_remainder(const DiffPolynomial& f, const AutoreducedSet& A) {
  return Reducer(A).run(f, true, true);
}

ReductionCertificate algebraic_remainder(const DiffPolynomial& f, const AutoreducedSet& A) {
  return Reducer(A).run(f, false, true);
}

// ---------------------------------------------------------------------------

AutoreducedSet basic_set(const std::vector<DiffPolynomial>& F, const Ranking& r,
                         ReductionMode mode) {
  std::vector<const DiffPolynomial*> candidates;
  for (const auto& f : F) {
    if (!f.is_constant()) candidates.push_back(&f);
  }
  if (candidates.empty()) throw std::invalid_argument("basic set of constants");
  std::sort(candidates.begin(), candidates.end(),
            [&r](const DiffPolynomial* a, const DiffPolynomial* b) {
              if (auto c = poly_rank_compare(r, *a, *b); c != 0) return c < 0;
              return ranked_compare(r, *a, *b) < 0;
            });
  std::vector<DiffPolynomial> chosen;
  for (const auto* f : candidates) {
    bool ok = true;
    for (const auto& g : chosen) {
      if (!is_reduced(*f, g, r, mode)) {
        ok = false;
        break;
      }
    }
    if (ok) chosen.push_back(*f);
  }
  return {std::move(chosen), r, mode};
}

std::strong_ordering set_rank_compare(const AutoreducedSet& A, const AutoreducedSet& B) {
  if (A.empty() && B.empty()) return std::strong_ordering::equal;
  const Ranking& r = A.empty() ? B.ranking() : A.ranking();
  if (!A.empty() && !B.empty()) {
    const auto& ra = A.ranking();
    const auto& rb = B.ranking();
    if (ra.basis_ptr() != rb.basis_ptr() || ra.kind() != rb.kind() ||
        ra.priority() != rb.priority() || ra.tie_break() != rb.tie_break() ||
        ra.blocks() != rb.blocks()) {
      throw std::invalid_argument("rank comparison across rankings");
    }
  }
  const auto a = A.ranks();
  const auto b = B.ranks();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare_rank(r, a[i], b[i]); c != 0) return c;
  }
  // With equal prefixes the longer set has the lower rank.
  return b.size() <=> a.size();
}

}  // namespace kolchin
