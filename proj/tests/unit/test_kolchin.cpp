#include "fixtures.hpp"

#include "kolchin/kolchin.hpp"

#include <doctest.h>

using namespace kolchin;
using fixtures::P;
using fixtures::Ps;

namespace {

struct Example {
  const char* name;
  std::vector<const char*> generators;
};

const std::vector<Example>& examples() {
  static const std::vector<Example> list{
      {"running", {"(x-t)*x'", "x'*y'", "(x-t)*(z'+y')"}},
      {"product", {"x*y"}},
      {"consistent", {"x*(x-1)", "x*y", "x*z"}},
      {"split", {"x*(x-1)", "(x-1)*y'", "(x-1)*(z'+y)", "x*y", "y*y'", "y*(z'+y)"}},
      {"order two", {"x*(x-1)", "x*y", "(x-1)*z''"}},
  };
  return list;
}

std::vector<DiffPolynomial> generators(const BasisPtr& b, const Example& e) {
  std::vector<DiffPolynomial> out;
  for (const char* g : e.generators) out.push_back(P(b, g));
  return out;
}

// Independent re-check of an algebraic characteristic set: B lies in the
// ideal, is algebraically autoreduced, and every basis element pseudo-reduces
// to zero.
bool certified(const AutoreducedSet& B, const algebra::GroebnerBasis& ideal) {
  for (const auto& b : B.elements()) {
    if (!algebra::contains(ideal, b)) return false;
  }
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (i != j && !is_reduced(B[i], B[j], B.ranking(), ReductionMode::algebraic)) return false;
    }
  }
  for (const auto& g : ideal.diff_generators()) {
    if (!algebraic_remainder(g, B).remainder.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("order bounds") {
  const auto b = fixtures::xyz_over_t();
  const auto r = Ranking::orderly(b);
  const auto D = chi_decomposition(Ps(b, {"(x-t)*x'", "x'*y'", "(x-t)*(z'+y')"}), r);
  CHECK(order_bound(D, BoundMode::component_order_sum).value == 2);
  CHECK(order_bound(D, BoundMode::max_element_order).value == 1);
  const auto E = chi_decomposition(generators(b, examples()[3]), r);
  CHECK(order_bound(E, BoundMode::component_order_sum).value == 2);
  CHECK(order_bound(E, BoundMode::max_element_order).value == 1);
  CHECK_THROWS_AS((void)order_bound(chi_decomposition(Ps(b, {"x", "x-1"}), r), BoundMode::max_element_order),
                  MathError);
  CHECK(to_string(BoundMode::component_order_sum) == "component_order_sum");
}

TEST_CASE("bound comparison on every example") {
  const auto b = fixtures::xyz_over_t();
  const auto r = Ranking::orderly(b);
  for (const auto& e : examples()) {
    CAPTURE(e.name);
    const auto D = chi_decomposition(generators(b, e), r);
    const int sum = order_bound(D, BoundMode::component_order_sum).value;
    const int max = order_bound(D, BoundMode::max_element_order).value;
    CHECK(max <= sum);
    CHECK(order_ring(r, max).size() <= order_ring(r, sum).size());
  }
}

TEST_CASE("finite rings of bounded order") {
  const auto b = fixtures::xyz_over_t();
  const auto r = Ranking::orderly(b);
  CHECK(order_ring(r, 0).size() == 3);
  CHECK(order_ring(r, 2).size() == 9);
  const auto pb = fixtures::partial_uv();
  CHECK(order_ring(Ranking::orderly(pb), 2).size() == 12);
  const auto ring = order_ring(r, 1);
  for (std::size_t i = 1; i < ring.size(); ++i) CHECK(r.less(ring.variables()[i], ring.variables()[i - 1]));
}

TEST_CASE("prolongation and intersection of the running example") {
  const auto b = fixtures::xyz_over_t();
  const auto r = Ranking::orderly(b);
  const auto D = chi_decomposition(Ps(b, {"(x-t)*x'", "x'*y'", "(x-t)*(z'+y')"}), r);
  const auto ring = order_ring(r, 1);
  const auto first = prolong_saturate(D.components[0], 1, ring);
  CHECK(first.prolongations == 1);
  CHECK(algebra::contains(first.ideal, P(b, "x'-1")));
  const auto second = prolong_saturate(D.components[1], 1, ring);
  CHECK(second.prolongations == 0);
  const auto G = intersect_components({first.ideal, second.ideal});
  const auto expected = algebra::groebner_basis(
      Ps(b, {"(x-t)*x'", "x'*(x'-1)", "x'*y'", "(x-t)*(z'+y')", "x'*z'-(z'+y')", "y'*(z'+y')"}), ring);
  CHECK(algebra::same_ideal(G, expected));
  CHECK_THROWS_AS((void)intersect_components({}), std::invalid_argument);
  const auto C = algebraic_charset(G, r);
  CHECK(C.elements() == Ps(b, {"x'*x-t*x'", "(x-t)*(z'+y')"}));
  CHECK(certified(C, G));
}

TEST_CASE("algebraic charsets are certified") {
  const auto b = fixtures::ordinary({"x", "y", "z"});
  const auto r = Ranking::orderly(b);
  fixtures::RandomPolys gen(61, b);
  gen.max_order = 1;
  gen.max_degree = 2;
  gen.max_terms = 3;
  int checked = 0;
  for (int k = 0; k < 40; ++k) {
    std::vector<DiffPolynomial> F{gen.nonconstant(), gen.nonconstant()};
    const auto G = algebra::groebner_basis(F, algebra::ring_of(F, r));
    if (algebra::is_trivial(G)) continue;
    const auto C = algebraic_charset(G, r);
    CHECK(certified(C, G));
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("lowest differentially autoreduced subset") {
  const auto b = fixtures::ordinary({"x", "y"});
  const auto r = Ranking::orderly(b);
  const AutoreducedSet C(Ps(b, {"x'^2-x", "y'*x-1", "y''-x"}), r, ReductionMode::algebraic);
  const auto S = lowest_diff_autoreduced_subset(C);
  CHECK(S.elements() == Ps(b, {"x'^2-x", "y'*x-1"}));
  CHECK_THROWS_AS((void)lowest_diff_autoreduced_subset(AutoreducedSet{}), std::invalid_argument);
}

TEST_CASE("characteristic sets of the worked examples") {
  const auto b = fixtures::xyz_over_t();
  const auto r = Ranking::orderly(b);
  const auto F = Ps(b, {"(x-t)*x'", "x'*y'", "(x-t)*(z'+y')"});
  const auto ord = charset_ordinary(F, r);
  CHECK(ord.charset.elements() == Ps(b, {"(x-t)*x'", "(x-t)*(z'+y')"}));
  CHECK(ord.certificate.algorithm == "ordinary");
  CHECK(ord.certificate.bound.value == 2);
  CHECK(ord.certificate.ring_dimension == 9);
  CHECK(ord.certificate.verification.ordinary_ok());
  const auto con = charset_consistent(F, r);
  CHECK(fixtures::rank_equal(con.charset, ord.charset));
  CHECK(con.certificate.algorithm == "consistent-orderly");
  CHECK(con.certificate.bound.value == 1);
  CHECK(con.certificate.ring_dimension == 6);
  CHECK(con.certificate.prolongations == 1);
  CHECK(con.certificate.verification.all_ok());

  for (const auto* text : {"x*y"}) {
    const auto G = Ps(b, {text});
    const auto a = charset_ordinary(G, r);
    const auto c = charset_consistent(G, r);
    CHECK(a.charset.elements() == G);
    CHECK(c.charset.elements() == G);
    CHECK(a.certificate.prolongations == 0);
    CHECK(c.certificate.prolongations == 0);
  }
}

TEST_CASE("consistency failures are reported") {
  const auto b = fixtures::xyz_over_t();
  const auto r = Ranking::orderly(b);
  const auto FI = generators(b, examples()[3]);
  const auto ord = charset_ordinary(FI, r);
  CHECK(ord.charset.elements() == Ps(b, {"x^2-x", "x*y", "(x-1)*z''"}));
  CHECK(ord.charset.elements().back().order() <= ord.certificate.bound.value);
  try {
    (void)charset_consistent(FI, r);
    FAIL("expected a verification failure");
  } catch (const VerificationError& e) {
    CHECK_FALSE(e.report().truncation);
    CHECK_FALSE(e.report().failures.empty());
  }
  CHECK_THROWS_AS((void)charset_consistent(generators(b, examples()[4]), r), VerificationError);
  CHECK_THROWS_AS((void)charset_ordinary(Ps(b, {"x", "x-1"}), r), MathError);
  CHECK_THROWS_AS((void)charset_ordinary(FI, Ranking::elimination(b)), std::invalid_argument);
}

TEST_CASE("verification flags") {
  const auto b = fixtures::ordinary({"x", "y", "z"});
  const auto r = Ranking::orderly(b);
  const auto F = Ps(b, {"x*(x-1)", "x*y", "x*z"});
  const auto D = chi_decomposition(F, r);
  CHECK(verify_charset(AutoreducedSet(F, r), F, D).all_ok());
  const auto missing = verify_charset(AutoreducedSet(Ps(b, {"x*(x-1)", "x*y"}), r), F, D);
  CHECK_FALSE(missing.generators_reduce);
  const auto outside = verify_charset(AutoreducedSet(Ps(b, {"x", "y"}), r), F, D);
  CHECK_FALSE(outside.in_ideal);
  CHECK_FALSE(outside.all_ok());
}

TEST_CASE("non-orderly and partial rankings") {
  const auto b = fixtures::ordinary({"x", "y", "z"});
  const auto F = Ps(b, {"x*(x-1)", "x*y", "x*z"});
  const auto res = charset_consistent(F, Ranking::elimination(b));
  CHECK(res.certificate.algorithm == "consistent-arbitrary");
  CHECK(res.charset.elements() == F);
  const auto pb = fixtures::partial_uv();
  const auto pr = Ranking::orderly(pb);
  const auto G = Ps(pb, {"u_x+v", "u_y"});
  const auto partial = charset_consistent(G, pr);
  CHECK(partial.charset.elements() == Ps(pb, {"u_y", "u_x+v", "v_y"}));
  CHECK(partial.certificate.verification.all_ok());
}

TEST_CASE("charsets are fixed points and rank-minimal") {
  const auto b = fixtures::xyz_over_t();
  const auto r = Ranking::orderly(b);
  for (const auto& e : examples()) {
    CAPTURE(e.name);
    const auto first = charset_ordinary(generators(b, e), r);
    const auto again = charset_ordinary(first.charset.elements(), r);
    CHECK(fixtures::rank_equal(first.charset, again.charset));
    const auto& C = first.charset;
    for (const auto& g : first.certificate.intersection.diff_generators()) {
      for (std::size_t k = 0; k < C.size(); ++k) {
        const bool reduced_by_prefix = std::all_of(C.elements().begin(), C.elements().begin() + static_cast<long>(k),
                                                   [&](const DiffPolynomial& c) { return is_reduced(g, c, r); });
        if (reduced_by_prefix) CHECK(poly_rank_compare(r, g, C[k]) >= 0);
      }
    }
  }
}
