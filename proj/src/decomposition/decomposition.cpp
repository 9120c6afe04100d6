#include "kolchin/decomposition.hpp"

#include "kolchin/kolchin.hpp"

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>

namespace kolchin {

DiffPolynomial normalize(const DiffPolynomial& f, const Ranking& r) {
  if (f.is_zero()) return f;
  if (f.is_constant()) return DiffPolynomial(1);
  return f.scaled(ranked_leading_coefficient(f, r).inverse());
}

namespace {

void add_unique(std::vector<DiffPolynomial>& v, DiffPolynomial p) {
  if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(std::move(p));
}

void add_inequation(std::vector<DiffPolynomial>& H, const DiffPolynomial& h, const Ranking& r) {
  if (!h.is_constant()) add_unique(H, normalize(h, r));
}

struct Task {
  std::vector<DiffPolynomial> equations;
  std::vector<DiffPolynomial> chain;
  std::vector<DiffPolynomial> inequations;
  std::size_t splits = 0;
};

struct Outcome {
  std::vector<Task> children;  // processed in list order
  std::optional<Component> component;
};

class Engine {
 public:
  Engine(const Ranking& r, const DecompositionOptions& options) : r_(r), options_(options) {}

  Outcome step(Task t) const {
    const AutoreducedSet A(t.chain, r_);
    for (;;) {
      std::erase_if(t.equations, [](const DiffPolynomial& p) { return p.is_zero(); });
      if (t.equations.empty()) return finalize(std::move(t), A);

      std::size_t pick = 0;
      for (std::size_t k = 1; k < t.equations.size(); ++k) {
        const auto& a = t.equations[k];
        const auto& b = t.equations[pick];
        if (auto c = poly_rank_compare(r_, a, b); c != 0) {
          if (c < 0) pick = k;
        } else if (options_.reverse_ties ? ranked_compare(r_, a, b) > 0
                                         : ranked_compare(r_, a, b) < 0) {
          pick = k;
        }
      }
      const DiffPolynomial p = t.equations[pick];
      t.equations.erase(t.equations.begin() + static_cast<std::ptrdiff_t>(pick));

      DiffPolynomial rem = full_remainder(p, A).remainder;
      if (rem.is_zero()) continue;
      if (rem.is_constant()) return {};
      rem = normalize(rem, r_);
      const auto ld = decompose_by_leader(rem, r_);

      Outcome out;
      if (!ld.initial.is_constant()) {
        Task vanish = t;
        vanish.equations.push_back(ld.initial);
        const DiffPolynomial tail =
            rem - ld.initial * DiffPolynomial::variable(ld.leader, ld.degree);
        if (!tail.is_zero()) vanish.equations.push_back(tail);
        out.children.push_back(std::move(vanish));
      }
      if (ld.degree > 1 && !ld.separant.is_constant()) {
        Task singular = t;
        singular.equations.push_back(rem);
        singular.equations.push_back(ld.separant);
        add_inequation(singular.inequations, ld.initial, r_);
        out.children.push_back(std::move(singular));
      }

      Task main;
      main.splits = t.splits;
      main.equations = t.equations;
      std::vector<DiffPolynomial> kept;
      for (const auto& a : A.elements()) {
        if (is_reduced(a, rem, r_)) {
          kept.push_back(a);
        } else {
          main.equations.push_back(a);
        }
      }
      kept.push_back(rem);
      const AutoreducedSet B(std::move(kept), r_);
      const auto fresh = static_cast<std::size_t>(
          std::find(B.elements().begin(), B.elements().end(), rem) - B.elements().begin());
      for (std::size_t j = 0; j < B.size(); ++j) {
        if (j == fresh) continue;
        if (auto d = delta_polynomial(B, std::min(j, fresh), std::max(j, fresh))) {
          if (!d->polynomial.is_zero()) main.equations.push_back(d->polynomial);
        }
      }
      main.chain = B.elements();
      main.inequations = t.inequations;
      add_inequation(main.inequations, ld.initial, r_);
      add_inequation(main.inequations, ld.separant, r_);
      const bool dead = std::any_of(
          main.inequations.begin(), main.inequations.end(),
          [&B](const DiffPolynomial& h) { return full_remainder(h, B).remainder.is_zero(); });
      if (!dead) out.children.push_back(std::move(main));
      return out;
    }
  }

 private:
  Outcome finalize(Task t, const AutoreducedSet& A) const {
    if (A.empty()) {
      Outcome out;
      out.component = Component{AutoreducedSet({}, r_), {}};
      return out;
    }
    if (auto coh = coherence_check(A); !coh.coherent) {
      t.equations.push_back(coh.witness->polynomial);
      return {{std::move(t)}, std::nullopt};
    }
    std::vector<DiffPolynomial> H;
    for (const auto& h : t.inequations) {
      const auto pr = partial_remainder(h, A).remainder;
      if (pr.is_zero()) return {};
      add_inequation(H, pr, r_);
    }
    for (const auto& h : A.h_set()) add_inequation(H, h, r_);

    const auto J = algebraic_saturation(A, H);
    if (algebra::is_trivial(J)) return {};
    const AutoreducedSet C = algebraic_charset(J, r_);

    auto restart = [&](std::vector<DiffPolynomial> extra, std::vector<DiffPolynomial> ineqs) {
      if (t.splits >= options_.max_splits) {
        throw MathError("decomposition did not converge within the split limit");
      }
      Task next;
      next.splits = t.splits + 1;
      next.equations = A.elements();
      for (auto& e : extra) next.equations.push_back(std::move(e));
      next.inequations = std::move(ineqs);
      return next;
    };

    if (C.leaders() != A.leaders()) {
      return {{restart(C.elements(), H)}, std::nullopt};
    }
    for (const auto& h : C.h_set()) {
      const auto Jh = algebra::saturate(J, J.ring.from_diff(h));
      if (algebra::same_ideal(Jh, J)) continue;
      std::vector<DiffPolynomial> with_h = C.elements();
      with_h.push_back(h);
      std::vector<DiffPolynomial> H_more = H;
      add_inequation(H_more, h, r_);
      Outcome out;
      out.children.push_back(restart(std::move(with_h), H));
      out.children.push_back(restart(C.elements(), std::move(H_more)));
      return out;
    }

    const AutoreducedSet Cd(C.elements(), r_);
    if (auto coh = coherence_check(Cd); !coh.coherent) {
      auto extra = C.elements();
      extra.push_back(coh.witness->polynomial);
      return {{restart(std::move(extra), H)}, std::nullopt};
    }
    Outcome out;
    out.component = Component{Cd, Cd.h_set()};
    return out;
  }

  const Ranking& r_;
  const DecompositionOptions& options_;
};

std::vector<Component> run_sequential(const Engine& engine, Task root) {
  std::vector<Component> found;
  std::vector<Task> stack;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    Outcome out = engine.step(std::move(t));
    if (out.component) found.push_back(std::move(*out.component));
    for (auto it = out.children.rbegin(); it != out.children.rend(); ++it) {
      stack.push_back(std::move(*it));
    }
  }
  return found;
}

std::vector<Component> run_parallel(const Engine& engine, Task root, unsigned threads) {
  std::mutex m;
  std::condition_variable cv;
  std::vector<Task> stack;
  std::vector<Component> found;
  std::size_t busy = 0;
  std::exception_ptr error;
  stack.push_back(std::move(root));

  auto worker = [&] {
    std::unique_lock lock(m);
    for (;;) {
      cv.wait(lock, [&] { return error || !stack.empty() || busy == 0; });
      if (error || stack.empty()) return;
      Task t = std::move(stack.back());
      stack.pop_back();
      ++busy;
      lock.unlock();
      Outcome out;
      std::exception_ptr failure;
      try {
        out = engine.step(std::move(t));
      } catch (...) {
        failure = std::current_exception();
      }
      lock.lock();
      --busy;
      if (failure && !error) error = failure;
      if (out.component) found.push_back(std::move(*out.component));
      for (auto it = out.children.rbegin(); it != out.children.rend(); ++it) {
        stack.push_back(std::move(*it));
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return found;
}

std::strong_ordering component_compare(const Ranking& r, const Component& a,
                                       const Component& b) {
  if (auto c = set_rank_compare(a.charset, b.charset); c != 0) return c;
  const auto& x = a.charset.elements();
  const auto& y = b.charset.elements();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (auto c = ranked_compare(r, x[i], y[i]); c != 0) return c;
  }
  return x.size() <=> y.size();
}

}  // namespace

CharDecomposition chi_decomposition(const std::vector<DiffPolynomial>& F, const Ranking& r,
                                    const DecompositionOptions& options) {
  Task root;
  for (const auto& f : F) {
    if (!f.is_zero()) root.equations.push_back(normalize(f, r));
  }
  const Engine engine(r, options);
  auto found = options.threads > 1 ? run_parallel(engine, std::move(root), options.threads)
                                   : run_sequential(engine, std::move(root));
  std::sort(found.begin(), found.end(), [&r](const Component& a, const Component& b) {
    return component_compare(r, a, b) < 0;
  });
  found.erase(std::unique(found.begin(), found.end(),
                          [&r](const Component& a, const Component& b) {
                            return component_compare(r, a, b) == 0;
                          }),
              found.end());
  CharDecomposition D;
  D.components = std::move(found);
  D.ranking = r;
  return D;
}

algebra::GroebnerBasis algebraic_saturation(const AutoreducedSet& A,
                                            const std::vector<DiffPolynomial>& H,
                                            const std::vector<DiffPolynomial>& extra) {
  std::vector<DiffPolynomial> everything = A.elements();
  everything.insert(everything.end(), H.begin(), H.end());
  everything.insert(everything.end(), extra.begin(), extra.end());
  const auto ring = algebra::ring_of(everything, A.ranking());
  auto G = algebra::groebner_basis(A.elements(), ring);
  for (const auto& h : H) {
    if (h.is_zero()) throw std::invalid_argument("saturation by zero");
    if (h.is_constant()) continue;
    if (algebra::is_trivial(G)) break;
    G = algebra::saturate(G, ring.from_diff(h));
  }
  return G;
}

bool regular_membership(const DiffPolynomial& g, const RegularSystem& system) {
  const AutoreducedSet& A = system.chain;
  if (A.empty()) return g.is_zero();
  const auto pr = partial_remainder(g, A).remainder;
  if (pr.is_zero()) return true;
  std::vector<DiffPolynomial> H = system.inequations;
  for (const auto& h : A.h_set()) add_unique(H, h);
  return algebra::contains(algebraic_saturation(A, H, {pr}), pr);
}

MembershipResult radical_membership(const DiffPolynomial& f, const CharDecomposition& D) {
  MembershipResult result;
  for (const auto& c : D.components) {
    const bool in = regular_membership(f, c.system());
    result.per_component.push_back(in);
    result.member = result.member && in;
  }
  return result;
}

bool component_is_consistent(const AutoreducedSet& C) {
  if (C.empty()) return true;
  if (auto coh = coherence_check(C); !coh.coherent) {
    throw std::invalid_argument("incoherent set: delta polynomial " +
                                to_string(coh.witness->polynomial, C.ranking()) +
                                " does not reduce to zero");
  }
  return !algebra::is_trivial(algebraic_saturation(C, C.h_set()));
}

}  // namespace kolchin
