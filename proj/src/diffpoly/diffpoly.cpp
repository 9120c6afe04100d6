#include "kolchin/diffpoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kolchin {

// ---------------------------------------------------------------------------
// DerivativeOperator / DiffVariable

DerivativeOperator DerivativeOperator::delta(int derivation) {
  if (derivation < 0 || derivation >= static_cast<int>(kMaxDerivations)) {
    throw std::out_of_range("derivation index out of range");
  }
  DerivativeOperator op;
  op.exponents[static_cast<std::size_t>(derivation)] = 1;
  return op;
}

DerivativeOperator DerivativeOperator::from_exponents(const std::vector<int>& exponents) {
  if (exponents.size() > kMaxDerivations) throw std::out_of_range("too many derivations");
  DerivativeOperator op;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw std::out_of_range("derivative exponent");
    op.exponents[i] = static_cast<std::uint8_t>(exponents[i]);
  }
  return op;
}

int DerivativeOperator::order() const {
  int s = 0;
  for (auto e : exponents) s += e;
  return s;
}

bool DerivativeOperator::divides(const DerivativeOperator& other) const {
  for (std::size_t i = 0; i < kMaxDerivations; ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

DerivativeOperator DerivativeOperator::quotient(const DerivativeOperator& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("operator quotient: not divisible");
  DerivativeOperator op;
  for (std::size_t i = 0; i < kMaxDerivations; ++i) {
    op.exponents[i] = static_cast<std::uint8_t>(exponents[i] - other.exponents[i]);
  }
  return op;
}

DerivativeOperator DerivativeOperator::lcm(const DerivativeOperator& other) const {
  DerivativeOperator op;
  for (std::size_t i = 0; i < kMaxDerivations; ++i) {
    op.exponents[i] = std::max(exponents[i], other.exponents[i]);
  }
  return op;
}

DerivativeOperator DerivativeOperator::operator*(const DerivativeOperator& other) const {
  DerivativeOperator op;
  for (std::size_t i = 0; i < kMaxDerivations; ++i) {
    const int s = exponents[i] + other.exponents[i];
    if (s > 255) throw std::overflow_error("derivative exponent overflow");
    op.exponents[i] = static_cast<std::uint8_t>(s);
  }
  return op;
}

bool DiffVariable::is_derivative_of(const DiffVariable& base) const {
  return indeterminate == base.indeterminate && base.op.divides(op);
}

bool DiffVariable::is_proper_derivative_of(const DiffVariable& base) const {
  return is_derivative_of(base) && op != base.op;
}

// ---------------------------------------------------------------------------
// DerivationBasis

DerivationBasis::DerivationBasis(std::vector<std::string> derivations,
                                 std::vector<std::string> indeterminates,
                                 std::vector<std::string> transcendentals,
                                 std::vector<std::vector<Scalar>> table)
    : derivations_(std::move(derivations)),
      indeterminates_(std::move(indeterminates)),
      transcendentals_(std::move(transcendentals)),
      table_(std::move(table)) {
  if (derivations_.empty()) throw std::invalid_argument("at least one derivation required");
  if (derivations_.size() > kMaxDerivations) throw std::invalid_argument("too many derivations");
  if (indeterminates_.empty()) throw std::invalid_argument("at least one indeterminate required");
  if (indeterminates_.size() > 0xFFFF) throw std::invalid_argument("too many indeterminates");
  std::set<std::string> seen;
  for (const auto* list : {&derivations_, &indeterminates_, &transcendentals_}) {
    for (const auto& name : *list) {
      if (name.empty()) throw std::invalid_argument("empty name");
      if (!seen.insert(name).second) throw std::invalid_argument("duplicate name: " + name);
    }
  }
  if (table_.empty()) {
    table_.assign(transcendentals_.size(), std::vector<Scalar>(derivations_.size()));
  }
  if (table_.size() != transcendentals_.size()) {
    throw std::invalid_argument("derivative table does not cover every generator");
  }
  for (const auto& row : table_) {
    if (row.size() != derivations_.size()) {
      throw std::invalid_argument("derivative table does not cover every derivation");
    }
    for (const auto& s : row) {
      for (const auto* p : {&s.numerator(), &s.denominator()}) {
        for (const auto& t : p->terms()) {
          for (const auto& [var, e] : t.monomial) {
            if (var >= static_cast<int>(transcendentals_.size())) {
              throw std::invalid_argument("derivative table uses an undeclared generator");
            }
          }
        }
      }
    }
  }
}

BasisPtr DerivationBasis::make(std::vector<std::string> derivations,
                               std::vector<std::string> indeterminates,
                               std::vector<std::string> transcendentals,
                               std::vector<std::vector<Scalar>> table) {
  return std::make_shared<const DerivationBasis>(std::move(derivations), std::move(indeterminates),
                                                 std::move(transcendentals), std::move(table));
}

namespace {
int find_name(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}
}  // namespace

int DerivationBasis::indeterminate_index(const std::string& name) const {
  return find_name(indeterminates_, name);
}
int DerivationBasis::derivation_index(const std::string& name) const {
  return find_name(derivations_, name);
}
int DerivationBasis::transcendental_index(const std::string& name) const {
  return find_name(transcendentals_, name);
}

bool DerivationBasis::valid(const DiffVariable& v) const {
  if (v.indeterminate >= indeterminates_.size()) return false;
  for (std::size_t i = derivations_.size(); i < kMaxDerivations; ++i) {
    if (v.op.exponents[i] != 0) return false;
  }
  return true;
}

namespace {
Scalar derive_mpoly(const MPoly& p, int derivation, const DerivationBasis& basis) {
  Scalar out;
  for (int g = 0; g < basis.transcendental_count(); ++g) {
    const Scalar& dg = basis.generator_derivative(g, derivation);
    if (dg.is_zero() || !p.contains(g)) continue;
    out += Scalar(p.partial_derivative(g)) * dg;
  }
  return out;
}
}  // namespace

Scalar DerivationBasis::differentiate(const Scalar& s, int derivation) const {
  if (derivation < 0 || derivation >= derivation_count()) {
    throw std::out_of_range("derivation index out of range");
  }
  if (s.is_rational()) return {};
  const Scalar dn = derive_mpoly(s.numerator(), derivation, *this);
  if (s.denominator().is_constant()) return dn;
  const Scalar dd = derive_mpoly(s.denominator(), derivation, *this);
  const Scalar den(s.denominator());
  return (dn * den - Scalar(s.numerator()) * dd) / (den * den);
}

// ---------------------------------------------------------------------------
// DiffPolynomial

namespace {

DiffMonomial multiply(const DiffMonomial& a, const DiffMonomial& b) {
  DiffMonomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<DiffPolynomial::Term> merge(const std::vector<DiffPolynomial::Term>& a,
                                        const std::vector<DiffPolynomial::Term>& b,
                                        bool negate) {
  std::vector<DiffPolynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = 1;
    else if (j == b.size()) c = -1;
    else c = a[i].monomial < b[j].monomial ? -1 : (b[j].monomial < a[i].monomial ? 1 : 0);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j]);
      if (negate) out.back().coefficient = -out.back().coefficient;
      ++j;
    } else {
      Scalar s = negate ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!s.is_zero()) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

DiffPolynomial::DiffPolynomial(long value) {
  if (value != 0) terms_.push_back({{}, Scalar(value)});
}

DiffPolynomial::DiffPolynomial(const Scalar& value) {
  if (!value.is_zero()) terms_.push_back({{}, value});
}

DiffPolynomial DiffPolynomial::variable(const DiffVariable& v, unsigned exponent) {
  if (exponent == 0) return DiffPolynomial(1);
  DiffPolynomial p;
  p.terms_.push_back({{{v, exponent}}, Scalar(1)});
  return p;
}

DiffPolynomial DiffPolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  DiffPolynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
  return p;
}

bool DiffPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.empty());
}

Scalar DiffPolynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("DiffPolynomial::constant_value on non-constant");
  return terms_.empty() ? Scalar() : terms_[0].coefficient;
}

std::vector<DiffVariable> DiffPolynomial::variables() const {
  std::vector<DiffVariable> out;
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.monomial) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool DiffPolynomial::contains(const DiffVariable& v) const { return degree(v) > 0; }

unsigned DiffPolynomial::degree(const DiffVariable& v) const {
  unsigned d = 0;
  for (const auto& t : terms_) {
    for (const auto& [w, e] : t.monomial) {
      if (w == v) d = std::max(d, e);
    }
  }
  return d;
}

std::vector<DiffPolynomial> DiffPolynomial::coefficients(const DiffVariable& v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    unsigned e = 0;
    DiffMonomial rest;
    rest.reserve(t.monomial.size());
    for (const auto& pe : t.monomial) {
      if (pe.first == v) e = pe.second;
      else rest.push_back(pe);
    }
    buckets[e].push_back({std::move(rest), t.coefficient});
  }
  std::vector<DiffPolynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

DiffPolynomial DiffPolynomial::partial_derivative(const DiffVariable& v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < t.monomial.size(); ++k) {
      if (t.monomial[k].first != v) continue;
      Term d{t.monomial, t.coefficient * Scalar(static_cast<long>(t.monomial[k].second))};
      if (--d.monomial[k].second == 0) d.monomial.erase(d.monomial.begin() + static_cast<long>(k));
      out.push_back(std::move(d));
    }
  }
  return from_terms(std::move(out));
}

int DiffPolynomial::order() const {
  int best = 0;
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.monomial) best = std::max(best, v.order());
  }
  return best;
}

int DiffPolynomial::order(int indeterminate) const {
  int best = -1;
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.monomial) {
      if (v.indeterminate == indeterminate) best = std::max(best, v.order());
    }
  }
  return best;
}

DiffPolynomial DiffPolynomial::differentiate(int derivation, const DerivationBasis& basis) const {
  if (derivation < 0 || derivation >= basis.derivation_count()) {
    throw std::out_of_range("derivation index out of range");
  }
  const DerivativeOperator d = DerivativeOperator::delta(derivation);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Scalar dc = basis.differentiate(t.coefficient, derivation);
    if (!dc.is_zero()) out.push_back({t.monomial, std::move(dc)});
    for (std::size_t k = 0; k < t.monomial.size(); ++k) {
      DiffMonomial m = t.monomial;
      const unsigned e = m[k].second;
      const DiffVariable dv = m[k].first.derived(d);
      if (e == 1) m.erase(m.begin() + static_cast<long>(k));
      else m[k].second = e - 1;
      out.push_back({multiply(m, DiffMonomial{{dv, 1U}}), t.coefficient * Scalar(static_cast<long>(e))});
    }
  }
  return from_terms(std::move(out));
}

DiffPolynomial DiffPolynomial::apply(const DerivativeOperator& theta,
                                     const DerivationBasis& basis) const {
  DiffPolynomial p = *this;
  for (int i = 0; i < basis.derivation_count(); ++i) {
    for (int k = 0; k < theta.exponents[static_cast<std::size_t>(i)]; ++k) {
      p = p.differentiate(i, basis);
    }
  }
  for (int i = basis.derivation_count(); i < static_cast<int>(kMaxDerivations); ++i) {
    if (theta.exponents[static_cast<std::size_t>(i)] != 0) {
      throw std::out_of_range("operator uses an undeclared derivation");
    }
  }
  return p;
}

DiffPolynomial DiffPolynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  DiffPolynomial p = *this;
  for (auto& t : p.terms_) t.coefficient *= c;
  return p;
}

DiffPolynomial DiffPolynomial::pow(unsigned exponent) const {
  DiffPolynomial result(1);
  DiffPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

DiffPolynomial DiffPolynomial::operator-() const {
  DiffPolynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& other) {
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

DiffPolynomial& DiffPolynomial::operator-=(const DiffPolynomial& other) {
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

DiffPolynomial& DiffPolynomial::operator*=(const DiffPolynomial& other) {
  *this = *this * other;
  return *this;
}

DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a.scaled(b.terms_[0].coefficient);
  if (a.is_constant()) return b.scaled(a.terms_[0].coefficient);
  std::vector<DiffPolynomial::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      out.push_back({multiply(s.monomial, t.monomial), s.coefficient * t.coefficient});
    }
  }
  return DiffPolynomial::from_terms(std::move(out));
}

bool operator==(const DiffPolynomial& a, const DiffPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial ||
        !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

std::strong_ordering canonical_compare(const DiffPolynomial& a, const DiffPolynomial& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].monomial < y[i].monomial) return std::strong_ordering::less;
    if (y[i].monomial < x[i].monomial) return std::strong_ordering::greater;
    if (auto c = canonical_compare(x[i].coefficient, y[i].coefficient); c != 0) return c;
  }
  return x.size() <=> y.size();
}

int order_query(const DiffPolynomial& f, std::optional<int> indeterminate) {
  if (f.is_zero()) throw std::invalid_argument("order of the zero polynomial");
  return indeterminate ? f.order(*indeterminate) : f.order();
}

}  // namespace kolchin
