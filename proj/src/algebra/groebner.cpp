#include "kolchin/algebra.hpp"

#include <algorithm>

namespace kolchin::algebra {

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  Polynomial p = f;
  std::vector<Polynomial::Term> rest;
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    const Polynomial* hit = nullptr;
    for (const auto& d : divisors) {
      if (!d.is_zero() && divides(d.leading_monomial(), lt.exponents)) {
        hit = &d;
        break;
      }
    }
    if (hit != nullptr) {
      const Scalar c = lt.coefficient / hit->leading_term().coefficient;
      p.sub_mul(c, quotient(lt.exponents, hit->leading_monomial()), *hit);
    } else {
      rest.push_back(lt);
      p.drop_leading();
    }
  }
  return Polynomial::from_terms(f.nvars(), std::move(rest));
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponents lcm;
};

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) return false;
  }
  return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Exponents& l) {
  Polynomial s = f.shifted(quotient(l, f.leading_monomial()), f.leading_term().coefficient.inverse());
  s.sub_mul(g.leading_term().coefficient.inverse(), quotient(l, g.leading_monomial()), g);
  return s;
}

class Engine {
 public:
  explicit Engine(std::size_t nvars) : nvars_(nvars) {}

  // Returns false once the unit ideal is detected.
  bool add(Polynomial h) {
    if (h.is_zero()) return true;
    h = h.monic();
    if (h.is_constant()) {
      unit_ = true;
      return false;
    }
    const std::size_t idx = basis_.size();
    basis_.push_back(std::move(h));
    for (auto& row : pending_) row.push_back(false);
    pending_.emplace_back(basis_.size(), false);
    for (std::size_t i = 0; i < idx; ++i) {
      pairs_.push_back({i, idx, lcm(basis_[i].leading_monomial(), basis_[idx].leading_monomial())});
      pending_[i][idx] = pending_[idx][i] = true;
    }
    return true;
  }

  bool run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto c = lex_compare(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::tie(pairs_[k].j, pairs_[k].i) <
                                    std::tie(pairs_[best].j, pairs_[best].i))) {
          best = k;
        }
      }
      const Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<long>(best));
      pending_[p.i][p.j] = pending_[p.j][p.i] = false;
      const auto& fi = basis_[p.i];
      const auto& fj = basis_[p.j];
      if (coprime(fi.leading_monomial(), fj.leading_monomial())) continue;
      if (chain_criterion(p)) continue;
      Polynomial r = reduce(s_polynomial(fi, fj, p.lcm), basis_);
      if (!add(std::move(r))) return false;
    }
    return true;
  }

  std::vector<Polynomial> result() const {
    if (unit_) return {Polynomial::constant(nvars_, Scalar(1))};
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& li = basis_[i].leading_monomial();
        const auto& lj = basis_[j].leading_monomial();
        if (divides(lj, li) && (li != lj || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      const auto& lt = minimal[i].leading_term();
      Polynomial head = Polynomial::monomial(lt.exponents, lt.coefficient);
      reduced.push_back((head + reduce(minimal[i].tail(), others)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
      return lex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return reduced;
  }

 private:
  bool chain_criterion(const Pair& p) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (pending_[p.i][k] || pending_[p.j][k]) continue;
      if (divides(basis_[k].leading_monomial(), p.lcm)) return true;
    }
    return false;
  }

  std::size_t nvars_;
  bool unit_ = false;
  std::vector<Polynomial> basis_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<bool>> pending_;
};

}  // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> generators, std::size_t nvars) {
  Engine engine(nvars);
  std::sort(generators.begin(), generators.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() && b.is_zero();
    return lex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.nvars() != nvars) throw std::invalid_argument("generator lives in a different ring");
    if (!engine.add(std::move(g))) return engine.result();
  }
  engine.run();
  return engine.result();
}

}  // namespace kolchin::algebra
