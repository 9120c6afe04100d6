#include "kolchin/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace kolchin {

std::strong_ordering lex_compare(const PowerProduct& a, const PowerProduct& b) {
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) {
      // The one holding the more significant variable is larger.
      return a[i].first < b[i].first ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
    }
    if (a[i].second != b[i].second) return a[i].second <=> b[i].second;
  }
  if (i < a.size()) return std::strong_ordering::greater;
  if (i < b.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

PowerProduct multiply(const PowerProduct& a, const PowerProduct& b) {
  PowerProduct out;
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

namespace {

bool divides(const PowerProduct& d, const PowerProduct& m) {
  std::size_t j = 0;
  for (const auto& [var, e] : d) {
    while (j < m.size() && m[j].first < var) ++j;
    if (j == m.size() || m[j].first != var || m[j].second < e) return false;
  }
  return true;
}

PowerProduct quotient(const PowerProduct& m, const PowerProduct& d) {
  PowerProduct out;
  std::size_t j = 0;
  for (const auto& [var, e] : m) {
    int sub = 0;
    if (j < d.size() && d[j].first == var) sub = d[j++].second;
    if (e - sub > 0) out.emplace_back(var, e - sub);
  }
  return out;
}

// Merge two descending term lists, b scaled by sign.
std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a,
                               const std::vector<MPoly::Term>& b, bool negate) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == a.size()) c = std::strong_ordering::less;
    else if (j == b.size()) c = std::strong_ordering::greater;
    else c = lex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (negate) out.back().coefficient = -out.back().coefficient;
      ++j;
    } else {
      mpq_class s = negate ? mpq_class(a[i].coefficient - b[j].coefficient)
                           : mpq_class(a[i].coefficient + b[j].coefficient);
      if (s != 0) out.push_back({a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly::MPoly(long value) {
  if (value != 0) terms_.push_back({{}, mpq_class(value)});
}

MPoly::MPoly(const mpq_class& value) {
  if (value != 0) terms_.push_back({{}, value});
}

MPoly MPoly::variable(int index, int exponent) {
  MPoly p;
  if (exponent == 0) return MPoly(1);
  p.terms_.push_back({{{index, exponent}}, mpq_class(1)});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return lex_compare(a.monomial, b.monomial) > 0;
  });
  MPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.empty());
}

mpq_class MPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("MPoly::constant_value on non-constant");
  return terms_.empty() ? mpq_class(0) : terms_[0].coefficient;
}

int MPoly::degree(int var) const {
  int d = 0;
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.monomial) {
      if (v == var) d = std::max(d, e);
    }
  }
  return d;
}

int MPoly::lowest_variable() const {
  int best = -1;
  for (const auto& t : terms_) {
    if (!t.monomial.empty() && (best < 0 || t.monomial.front().first < best)) {
      best = t.monomial.front().first;
    }
  }
  return best;
}

bool MPoly::contains(int var) const {
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.monomial) {
      if (v == var) return true;
    }
  }
  return false;
}

std::vector<MPoly> MPoly::coefficients(int var) const {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree(var)) + 1);
  for (const auto& t : terms_) {
    int e = 0;
    PowerProduct rest;
    for (const auto& pe : t.monomial) {
      if (pe.first == var) e = pe.second;
      else rest.push_back(pe);
    }
    buckets[static_cast<std::size_t>(e)].push_back({std::move(rest), t.coefficient});
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MPoly MPoly::partial_derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < t.monomial.size(); ++k) {
      if (t.monomial[k].first != var) continue;
      Term d{t.monomial, t.coefficient * t.monomial[k].second};
      if (--d.monomial[k].second == 0) d.monomial.erase(d.monomial.begin() + static_cast<long>(k));
      out.push_back(std::move(d));
    }
  }
  return from_terms(std::move(out));
}

MPoly MPoly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  MPoly p = *this;
  for (auto& t : p.terms_) t.coefficient *= c;
  return p;
}

MPoly MPoly::monic() const {
  if (is_zero()) return {};
  mpq_class inv = 1 / terms_.front().coefficient;
  return scaled(inv);
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result(1);
  MPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a.scaled(b.terms_[0].coefficient);
  if (a.is_constant()) return b.scaled(a.terms_[0].coefficient);
  std::vector<MPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      out.push_back({multiply(s.monomial, t.monomial), s.coefficient * t.coefficient});
    }
  }
  return MPoly::from_terms(std::move(out));
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial ||
        a.terms_[i].coefficient != b.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("MPoly: division by zero");
  if (divisor.is_constant()) return scaled(1 / divisor.terms_[0].coefficient);
  MPoly rem = *this;
  std::vector<Term> q;
  const Term& lead = divisor.terms_.front();
  while (!rem.is_zero()) {
    const Term& top = rem.terms_.front();
    if (!divides(lead.monomial, top.monomial)) return std::nullopt;
    Term t{quotient(top.monomial, lead.monomial), top.coefficient / lead.coefficient};
    MPoly step;
    step.terms_.push_back(t);
    rem -= step * divisor;
    q.push_back(std::move(t));
  }
  return from_terms(std::move(q));
}

MPoly pseudo_remainder(const MPoly& f, const MPoly& g, int var) {
  const int dg = g.degree(var);
  const MPoly lc = g.coefficients(var).back();
  MPoly r = f;
  int dr = r.degree(var);
  while (!r.is_zero() && dr >= dg) {
    MPoly lr = r.coefficients(var).back();
    r = lc * r - lr * MPoly::variable(var, dr - dg) * g;
    dr = r.degree(var);
  }
  return r;
}

MPoly content_in(const MPoly& f, int var) {
  MPoly g;
  for (const auto& c : f.coefficients(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  const int la = a.lowest_variable();
  const int lb = b.lowest_variable();
  const int v = (la < 0) ? lb : (lb < 0 ? la : std::min(la, lb));
  if (!a.contains(v)) return gcd(a, content_in(b, v));
  if (!b.contains(v)) return gcd(content_in(a, v), b);

  const MPoly ca = content_in(a, v);
  const MPoly cb = content_in(b, v);
  MPoly pa = *a.divide_exact(ca);
  MPoly pb = *b.divide_exact(cb);
  const MPoly c = gcd(ca, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (true) {
    MPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      pb = MPoly(1);
      break;
    }
    pa = std::move(pb);
    pb = r.divide_exact(content_in(r, v))->monic();
  }
  if (!pb.is_constant()) pb = *pb.divide_exact(content_in(pb, v));
  return (c * pb).monic();
}

std::strong_ordering canonical_compare(const mpq_class& a, const mpq_class& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering canonical_compare(const MPoly& a, const MPoly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = lex_compare(x[i].monomial, y[i].monomial); c != 0) return c;
    if (auto c = canonical_compare(x[i].coefficient, y[i].coefficient); c != 0) return c;
  }
  return x.size() <=> y.size();
}

}  // namespace kolchin
