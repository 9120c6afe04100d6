// Acceptance criteria: one PASS/FAIL line per criterion, nonzero exit on
// any failure.

#include "corpus.hpp"
#include "fixtures.hpp"
#include "golden.hpp"
#include "instances.hpp"
#include "oracle.hpp"

#include "kolchin/kolchin.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace kolchin;
using fixtures::P;
using fixtures::Ps;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    if (!ok) detail << "; ";
    ok = false;
    detail << what;
  }
};

const std::vector<const char*> kRunning{"(x-t)*x'", "x'*y'", "(x-t)*(z'+y')"};
const std::vector<const char*> kConsistent{"x*(x-1)", "x*y", "x*z"};
const std::vector<const char*> kSplit{"x*(x-1)", "(x-1)*y'", "(x-1)*(z'+y)", "x*y", "y*y'", "y*(z'+y)"};
const std::vector<const char*> kOrderTwo{"x*(x-1)", "x*y", "(x-1)*z''"};

std::vector<DiffPolynomial> polys(const BasisPtr& b, const std::vector<const char*>& texts) {
  std::vector<DiffPolynomial> out;
  for (const char* t : texts) out.push_back(P(b, t));
  return out;
}

std::vector<algebra::Polynomial> lift(const std::vector<oracle::QPoly>& F) {
  std::vector<algebra::Polynomial> out;
  for (const auto& f : F) out.push_back(oracle::to_algebra(f, corpus::kVars));
  return out;
}

bool same(const std::vector<algebra::Polynomial>& lib, const std::vector<oracle::QPoly>& ref) {
  if (lib.size() != ref.size()) return false;
  for (std::size_t k = 0; k < lib.size(); ++k) {
    if (!(lib[k] == oracle::to_algebra(ref[k], corpus::kVars))) return false;
  }
  return true;
}

std::vector<std::set<DiffVariable>> component_leaders(const CharDecomposition& D) {
  std::vector<std::set<DiffVariable>> out;
  for (const auto& c : D.components) out.push_back(fixtures::leader_set(c.charset));
  return out;
}

std::size_t matching_components(const AutoreducedSet& C, const CharDecomposition& D) {
  const auto leaders = fixtures::leader_set(C);
  std::size_t n = 0;
  for (const auto& l : component_leaders(D)) n += l == leaders ? 1 : 0;
  return n;
}

void running_example(Outcome& o) {
  const auto b = fixtures::xyz_over_t();
  const auto r = Ranking::orderly(b);
  const auto F = polys(b, kRunning);
  const auto expected_text = Ps(b, {"(x-t)*x'", "x'*(x'-1)", "x'*y'", "(x-t)*(z'+y')", "x'*z'-(z'+y')",
                                    "y'*(z'+y')"});
  const AutoreducedSet paper_charset(Ps(b, {"(x-t)*x'", "(x-t)*(z'+y')"}), r);

  const auto con = charset_consistent(F, r);
  const auto& G1 = con.certificate.intersection;
  o.expect(con.certificate.bound.value == 1, "max bound is not 1");
  o.expect(algebra::same_ideal(G1, algebra::groebner_basis(expected_text, G1.ring)),
           "intersection at h=1 differs from G");
  o.expect(G1.generators.size() == 6, "G at h=1 does not have six elements");
  o.expect(fixtures::rank_equal(con.charset, paper_charset), "consistent charset rank differs");

  const auto ord = charset_ordinary(F, r);
  o.expect(ord.certificate.bound.value == 2, "sum bound is not 2");
  const auto slice = algebra::eliminate(ord.certificate.intersection, order_ring(r, 1).variables());
  o.expect(algebra::same_ideal(slice, algebra::groebner_basis(expected_text, slice.ring)),
           "order<=1 slice of the h=2 intersection differs from G");
  o.expect(fixtures::rank_equal(ord.charset, paper_charset), "ordinary charset rank differs");
}

void product(Outcome& o) {
  const auto b = fixtures::ordinary({"x", "y"});
  const auto r = Ranking::orderly(b);
  const auto F = Ps(b, {"x*y"});
  const auto a = charset_ordinary(F, r);
  const auto c = charset_consistent(F, r);
  o.expect(a.charset.elements() == F, "ordinary charset is not {xy}");
  o.expect(c.charset.elements() == F, "consistent charset is not {xy}");
  o.expect(a.certificate.prolongations == 0 && c.certificate.prolongations == 0, "prolongations used");
}

void consistency_example(Outcome& o) {
  const auto b = fixtures::ordinary({"x", "y", "z"});
  const auto r = Ranking::orderly(b);
  const auto F = polys(b, kConsistent);
  const auto D = chi_decomposition(F, r);
  const AutoreducedSet c1(Ps(b, {"x"}), r);
  const AutoreducedSet c2(Ps(b, {"x-1", "y", "z"}), r);
  o.expect(D.components.size() == 2, "expected two components");
  if (D.components.size() == 2) {
    const auto& a = D.components[0].charset;
    const auto& z = D.components[1].charset;
    const bool matched = (fixtures::rank_equal(a, c1) && fixtures::rank_equal(z, c2)) ||
                         (fixtures::rank_equal(a, c2) && fixtures::rank_equal(z, c1));
    o.expect(matched, "components are not {x}, {x-1,y,z}");
  }
  const AutoreducedSet C(F, r);
  const auto report = verify_charset(C, F, D);
  o.expect(report.consistent, "consistency flag is false");
  o.expect(report.all_ok(), "verification of the input charset failed");
  const auto res = charset_consistent(F, r);
  o.expect(fixtures::rank_equal(res.charset, C), "consistent charset rank differs from the input");
}

void counterexample(Outcome& o) {
  const auto b = fixtures::xyz_over_t();
  const auto r = Ranking::orderly(b);
  {
    const auto F = Ps(b, {"x*(x-1)", "x*y", "(x-1)*z"});
    const auto D = chi_decomposition(F, r);
    o.expect(!verify_charset(AutoreducedSet(F, r), F, D).consistent, "{x(x-1),xy,(x-1)z} reported consistent");
  }
  const auto split = polys(b, kSplit);
  const auto ord = charset_ordinary(split, r);
  const auto top = ord.charset.elements().back();
  o.expect(top.order() == 2, "ordinary charset has no order-2 leader");
  o.expect(top.order() <= ord.certificate.bound.value, "leader order exceeds the sum bound");
  bool threw = false;
  try {
    (void)charset_consistent(split, r);
  } catch (const VerificationError& e) {
    threw = !e.report().truncation;
  }
  o.expect(threw, "max-bound run did not fail its truncation check");

  const auto order_two = polys(b, kOrderTwo);
  const auto ord2 = charset_ordinary(order_two, r);
  o.expect(ord2.charset.elements().back().order() == 2, "secondary: no order-2 leader");
  bool threw2 = false;
  try {
    (void)charset_consistent(order_two, r);
  } catch (const VerificationError&) {
    threw2 = true;
  }
  o.expect(threw2, "secondary: max-bound run was accepted");
}

void bounds(Outcome& o) {
  const auto t = fixtures::xyz_over_t();
  const auto plain = fixtures::ordinary({"x", "y", "z"});
  const std::vector<std::pair<BasisPtr, std::vector<const char*>>> systems{
      {t, kRunning},
      {plain, {"x*y"}},
      {plain, kConsistent},
      {plain, {"x*(x-1)", "x*y", "(x-1)*z"}},
      {t, kSplit},
      {t, kOrderTwo}};
  for (const auto& [b, texts] : systems) {
    const auto r = Ranking::orderly(b);
    const auto F = polys(b, texts);
    const auto D = chi_decomposition(F, r);
    const auto sum = order_bound(D, BoundMode::component_order_sum).value;
    const auto max = order_bound(D, BoundMode::max_element_order).value;
    o.expect(max <= sum, std::string("max > sum for ") + texts.front());
    try {
      const auto a = charset_ordinary(F, r);
      const auto c = charset_consistent(F, r);
      o.expect(c.certificate.ring_dimension <= a.certificate.ring_dimension,
               std::string("consistent ring larger for ") + texts.front());
    } catch (const VerificationError&) {
    }
  }
}

void reduction_certificates(Outcome& o) {
  std::size_t bad = 0;
  for (const auto& [A, f] : instances::reduction_instances(200)) {
    const auto cert = full_remainder(f, A);
    bool ok = cert.verify(f, A) && fixtures::expand_identity(cert, f, A) == cert.remainder;
    for (const auto& a : A.elements()) {
      ok = ok && reduction_status(cert.remainder, a, A.ranking()) == ReductionStatus::reduced;
    }
    bad += ok ? 0 : 1;
  }
  o.expect(bad == 0, std::to_string(bad) + " of 200 certificates failed");
}

void groebner(Outcome& o) {
  std::mt19937 rng(7);
  std::size_t bad = 0;
  const auto ring = algebra::FiniteRing::with_order({DiffVariable(0), DiffVariable(1), DiffVariable(2)},
                                                    fixtures::ordinary({"x", "y", "z"}));
  const auto ideals = corpus::ideals(200);
  for (const auto& F : ideals) {
    const auto I = algebra::groebner_basis(lift(F), ring);
    bool ok = same(I.generators, oracle::naive_groebner(F));
    auto hq = corpus::random_poly(rng, 2, 2);
    if (hq.empty()) hq = oracle::constant(corpus::kVars, 1);
    ok = ok && same(algebra::saturate(I, oracle::to_algebra(hq, corpus::kVars)).generators,
                    oracle::saturation(F, hq, corpus::kVars));
    const auto companion = corpus::companion(rng);
    const auto J = algebra::groebner_basis(lift(companion), ring);
    ok = ok && same(algebra::intersect(I, J).generators, oracle::intersection(F, companion, corpus::kVars));
    bad += ok ? 0 : 1;
  }
  o.expect(bad == 0, std::to_string(bad) + " of " + std::to_string(ideals.size()) + " ideals disagree");
}

void membership(Outcome& o) {
  std::size_t bad = 0;
  std::size_t total = 0;
  const auto systems = instances::coherent_systems(25);
  for (std::size_t s = 0; s < systems.size(); ++s) {
    const auto& system = systems[s];
    for (const auto& g : instances::membership_queries(system, 8, static_cast<unsigned>(100 + s))) {
      int N = g.is_constant() ? 0 : g.order();
      for (const auto& a : system.chain.elements()) N = std::max(N, a.order());
      const bool expected = oracle::truncated_member(g, system.chain.elements(), system.inequations,
                                                     system.chain.ranking().basis(), N);
      bad += regular_membership(g, system) == expected ? 0 : 1;
      ++total;
    }
  }
  o.expect(bad == 0, std::to_string(bad) + " of " + std::to_string(total) + " queries disagree");
}

void coefficients(Outcome& o) {
  std::size_t bad = 0;
  for (const auto& inst : instances::coefficient_instances(50)) {
    bool ok = full_remainder(inst.f, inst.A).remainder.is_zero();
    for (const auto& c : inst.f.coefficients(inst.xt)) ok = ok && full_remainder(c, inst.A).remainder.is_zero();
    bad += ok ? 0 : 1;
  }
  o.expect(bad == 0, std::to_string(bad) + " of 50 instances have a non-reducing coefficient");
}

void localization(Outcome& o) {
  const auto b = fixtures::ordinary({"x", "y", "z"});
  for (const auto& texts : {std::vector<const char*>{"x*y"}, kConsistent}) {
    const auto F = polys(b, texts);
    for (const auto& r : {Ranking::orderly(b), Ranking::elimination(b)}) {
      const auto C = charset_consistent(F, r).charset;
      const auto D = chi_decomposition(F, r);
      o.expect(matching_components(C, D) == 1,
               std::string(r.is_orderly() ? "orderly" : "elimination") + ": leaders of charset of " +
                   texts.front() + " do not match exactly one component");
    }
  }
  const auto t = fixtures::xyz_over_t();
  const auto r = Ranking::orderly(t);
  const auto ord = charset_ordinary(polys(t, kSplit), r);
  o.expect(matching_components(ord.charset, ord.decomposition) == 0,
           "counterexample charset leaders match a component");
}

void golden_documents(Outcome& o) {
  for (const auto& c : golden::cases()) {
    const auto r = golden::run(c.args);
    o.expect(r.exit_code == c.exit_code, c.output + ": exit " + std::to_string(r.exit_code));
    o.expect(r.out == golden::slurp(golden::path(c.output)), c.output + ": output differs");
  }
  for (const auto* bad : {"malformed.json", "broken_document.json"}) {
    o.expect(golden::run({"charset", "-i", bad}).exit_code == 2, std::string(bad) + ": exit is not 2");
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: no time limit
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "running example: G at h=1 and charset", 10, running_example},
      {2, "{xy}: charset without prolongation", 1, product},
      {3, "consistency example", 5, consistency_example},
      {4, "counterexample to the max bound", 30, counterexample},
      {5, "max bound <= sum bound, ring sizes", 0, bounds},
      {6, "reduction certificates (200 instances)", 0, reduction_certificates},
      {7, "Groebner, saturation, intersection vs oracle", 0, groebner},
      {8, "regular membership vs truncated oracle", 0, membership},
      {9, "coefficients of ideal members reduce to zero", 0, coefficients},
      {10, "charset leaders localize to one component", 0, localization},
      {11, "golden CLI documents and exit codes", 0, golden_documents},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0) {
      std::ostringstream limit;
      limit << "took " << elapsed << " s, limit " << c.limit_seconds << " s";
      o.expect(elapsed <= c.limit_seconds, limit.str());
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, elapsed,
                o.ok ? "" : " -- ", o.detail.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
