#include "kolchin/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace kolchin::algebra {

std::strong_ordering lex_compare(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

bool divides(const Exponents& d, const Exponents& m) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents quotient(const Exponents& m, const Exponents& d) {
  Exponents out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = static_cast<std::uint16_t>(m[i] - d[i]);
  return out;
}

namespace {

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned s = static_cast<unsigned>(a[i]) + b[i];
    if (s > 0xFFFF) throw std::overflow_error("exponent overflow");
    out[i] = static_cast<std::uint16_t>(s);
  }
  return out;
}

using Terms = std::vector<Polynomial::Term>;

Terms merge(const Terms& a, const Terms& b, bool negate) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == a.size()) c = std::strong_ordering::less;
    else if (j == b.size()) c = std::strong_ordering::greater;
    else c = lex_compare(a[i].exponents, b[j].exponents);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (negate) out.back().coefficient = -out.back().coefficient;
      ++j;
    } else {
      Scalar s = negate ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!s.is_zero()) out.push_back({a[i].exponents, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Exponents(nvars, 0), c});
  return p;
}

Polynomial Polynomial::monomial(const Exponents& e, const Scalar& c) {
  Polynomial p(e.size());
  if (!c.is_zero()) p.terms_.push_back({e, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(e, Scalar(1));
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return lex_compare(a.exponents, b.exponents) > 0;
  });
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (t.exponents.size() != nvars) throw std::invalid_argument("exponent vector size mismatch");
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (auto e : terms_[0].exponents) {
    if (e != 0) return false;
  }
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || terms_.front().coefficient.is_one()) return *this;
  return scaled(terms_.front().coefficient.inverse());
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(nvars_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient *= c;
  return p;
}

Polynomial Polynomial::shifted(const Exponents& e, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(nvars_);
  Polynomial p(nvars_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({add(t.exponents, e), t.coefficient * c});
  return p;
}

void Polynomial::sub_mul(const Scalar& c, const Exponents& e, const Polynomial& g) {
  terms_ = merge(terms_, g.shifted(e, c).terms_, true);
}

Polynomial Polynomial::lifted(std::size_t k) const {
  Polynomial p(nvars_ + k);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(k, 0);
    e.insert(e.end(), t.exponents.begin(), t.exponents.end());
    p.terms_.push_back({std::move(e), t.coefficient});
  }
  return p;
}

Polynomial Polynomial::dropped(std::size_t k) const {
  Polynomial p(nvars_ - k);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < k; ++i) {
      if (t.exponents[i] != 0) throw std::logic_error("dropping a variable that occurs");
    }
    p.terms_.push_back({Exponents(t.exponents.begin() + static_cast<long>(k), t.exponents.end()),
                        t.coefficient});
  }
  return p;
}

Polynomial Polynomial::permuted(const std::vector<std::size_t>& perm) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) e[i] = t.exponents[perm[i]];
    out.push_back({std::move(e), t.coefficient});
  }
  return from_terms(perm.size(), std::move(out));
}

bool Polynomial::involves(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [index](const Term& t) { return t.exponents[index] != 0; });
}

Polynomial Polynomial::tail() const {
  Polynomial p(nvars_);
  if (!terms_.empty()) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial p(std::max(a.nvars_, b.nvars_));
  p.terms_ = merge(a.terms_, b.terms_, false);
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial p(std::max(a.nvars_, b.nvars_));
  p.terms_ = merge(a.terms_, b.terms_, true);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      out.push_back({add(s.exponents, t.exponents), s.coefficient * t.coefficient});
    }
  }
  return Polynomial::from_terms(std::max(a.nvars_, b.nvars_), std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents ||
        !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

}  // namespace kolchin::algebra
