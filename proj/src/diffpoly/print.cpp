#include "kolchin/diffpoly.hpp"

#include <algorithm>

namespace kolchin {

namespace {

std::string power_product(const PowerProduct& m, const DerivationBasis& basis) {
  std::string out;
  for (const auto& [var, e] : m) {
    if (!out.empty()) out += '*';
    out += basis.transcendentals()[static_cast<std::size_t>(var)];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string rational(const mpq_class& q) { return q.get_str(); }

// Signed term list; "+" separators are inserted by the caller.
std::string mpoly_string(const MPoly& p, const DerivationBasis& basis) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = t.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (negative) out += '-';
    else if (!first) out += '+';
    first = false;
    if (t.monomial.empty()) {
      out += rational(c);
    } else {
      if (c != 1) out += rational(c) + '*';
      out += power_product(t.monomial, basis);
    }
  }
  return out;
}

bool is_single_term(const MPoly& p) { return p.terms().size() == 1; }

bool is_bare_power(const MPoly& p) {
  return is_single_term(p) && p.leading_term().coefficient == 1 &&
         p.leading_term().monomial.size() == 1;
}

bool scalar_negative(const Scalar& s) {
  return !s.is_zero() && s.numerator().leading_term().coefficient < 0;
}

// Unsigned rendering of a positive-leading scalar suitable as a factor.
std::string scalar_factor(const Scalar& s, const DerivationBasis& basis) {
  std::string num = mpoly_string(s.numerator(), basis);
  if (s.denominator().is_constant()) {
    if (is_single_term(s.numerator())) return num;
    return '(' + num + ')';
  }
  if (!is_single_term(s.numerator())) num = '(' + num + ')';
  std::string den = mpoly_string(s.denominator(), basis);
  if (!is_bare_power(s.denominator())) den = '(' + den + ')';
  return num + '/' + den;
}

}  // namespace

std::string to_string(const Scalar& s, const DerivationBasis& basis) {
  if (s.is_zero()) return "0";
  if (scalar_negative(s)) return '-' + scalar_factor(-s, basis);
  return scalar_factor(s, basis);
}

std::string to_string(const DiffVariable& v, const DerivationBasis& basis) {
  std::string out = basis.indeterminates()[v.indeterminate];
  if (basis.is_ordinary()) {
    const int k = v.order();
    if (k <= 3) out.append(static_cast<std::size_t>(k), '\'');
    else out += "^(" + std::to_string(k) + ")";
    return out;
  }
  if (v.order() == 0) return out;
  out += '_';
  for (int i = 0; i < basis.derivation_count(); ++i) {
    for (int k = 0; k < v.op.exponents[static_cast<std::size_t>(i)]; ++k) {
      out += basis.derivations()[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

std::string to_string(const DiffPolynomial& f, const Ranking& r) {
  if (f.is_zero()) return "0";
  const DerivationBasis& basis = r.basis();
  struct Row {
    DiffMonomial monomial;  // descending by ranking
    const Scalar* coefficient;
  };
  std::vector<Row> rows;
  rows.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Row row{t.monomial, &t.coefficient};
    std::sort(row.monomial.begin(), row.monomial.end(),
              [&r](const auto& a, const auto& b) { return r.compare(a.first, b.first) > 0; });
    rows.push_back(std::move(row));
  }
  auto greater = [&r](const Row& a, const Row& b) {
    const std::size_t n = std::min(a.monomial.size(), b.monomial.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = r.compare(a.monomial[i].first, b.monomial[i].first); c != 0) return c > 0;
      if (a.monomial[i].second != b.monomial[i].second) {
        return a.monomial[i].second > b.monomial[i].second;
      }
    }
    return a.monomial.size() > b.monomial.size();
  };
  std::sort(rows.begin(), rows.end(), greater);

  std::string out;
  bool first = true;
  for (const auto& row : rows) {
    Scalar c = *row.coefficient;
    const bool negative = scalar_negative(c);
    if (negative) c = -c;
    if (negative) out += '-';
    else if (!first) out += '+';
    first = false;
    std::string mono;
    for (const auto& [v, e] : row.monomial) {
      if (!mono.empty()) mono += '*';
      mono += to_string(v, basis);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      out += scalar_factor(c, basis);
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += scalar_factor(c, basis) + '*' + mono;
    }
  }
  return out;
}

}  // namespace kolchin
