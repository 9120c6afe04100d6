#include "corpus.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

#include "kolchin/algebra.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace kolchin;
using fixtures::P;
using fixtures::Ps;

namespace {

algebra::FiniteRing xyz_ring() {
  static const auto basis = fixtures::ordinary({"x", "y", "z"});
  return algebra::FiniteRing::with_order({DiffVariable(0), DiffVariable(1), DiffVariable(2)}, basis);
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

}  // namespace

TEST_CASE("Buchberger agrees with naive S-pair closure") {
  const auto ideals = corpus::ideals(80);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    CAPTURE(i);
    CHECK(same(algebra::buchberger(lift(ideals[i]), corpus::kVars), oracle::naive_groebner(ideals[i])));
  }
}

TEST_CASE("reduced basis is independent of generator order") {
  std::mt19937 rng(3);
  for (const auto& F : corpus::ideals(40)) {
    auto shuffled = lift(F);
    const auto reference = algebra::buchberger(shuffled, corpus::kVars);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(algebra::buchberger(shuffled, corpus::kVars) == reference);
    }
  }
}

TEST_CASE("explicit combinations normalize to zero") {
  std::mt19937 rng(8);
  const auto ring = xyz_ring();
  for (const auto& F : corpus::ideals(40)) {
    if (F.empty()) continue;
    const auto G = algebra::groebner_basis(lift(F), ring);
    algebra::Polynomial f(corpus::kVars);
    for (const auto& g : lift(F)) f = f + oracle::to_algebra(corpus::random_poly(rng, 2, 2), corpus::kVars) * g;
    CHECK(algebra::normal_form(f, G).is_zero());
  }
}

TEST_CASE("saturation properties") {
  const auto ring = xyz_ring();
  std::mt19937 rng(21);
  for (const auto& F : corpus::ideals(30)) {
    const auto I = algebra::groebner_basis(lift(F), ring);
    auto hq = corpus::random_poly(rng, 2, 2);
    if (hq.empty()) hq = oracle::constant(corpus::kVars, 1);
    const auto h = oracle::to_algebra(hq, corpus::kVars);
    const auto S = algebra::saturate(I, h);
    for (const auto& g : I.generators) CHECK(algebra::normal_form(g, S).is_zero());
    CHECK(algebra::saturate(S, h) == S);
    CHECK(same(S.generators, oracle::saturation(F, hq, corpus::kVars)));
  }
  const auto b = fixtures::ordinary({"x", "y", "z"});
  const auto r = Ranking::orderly(b);
  const auto Fx = Ps(b, {"x*y", "x*z"});
  const auto I = algebra::groebner_basis(Fx, algebra::ring_of(Fx, r));
  CHECK(algebra::saturate(I, I.ring.from_diff(P(b, "1 + x*y"))) == I);
  CHECK(algebra::saturate(I, I.ring.from_diff(P(b, "3"))) == I);
  const auto Sx = algebra::saturate(I, I.ring.from_diff(P(b, "x")));
  CHECK(algebra::same_ideal(Sx, algebra::groebner_basis(Ps(b, {"y", "z"}), I.ring)));
}

TEST_CASE("intersection properties") {
  const auto ring = xyz_ring();
  std::mt19937 rng(31);
  for (const auto& F : corpus::ideals(40)) {
    const auto companion = corpus::companion(rng);
    const auto I = algebra::groebner_basis(lift(F), ring);
    const auto J = algebra::groebner_basis(lift(companion), ring);
    const auto K = algebra::intersect(I, J);
    CHECK(K == algebra::intersect(J, I));
    CHECK(same(K.generators, oracle::intersection(F, companion, corpus::kVars)));
  }
}

TEST_CASE("the running example's intersection basis") {
  const auto b = fixtures::xyz_over_t();
  const auto r = Ranking::orderly(b);
  const auto ring = algebra::FiniteRing(
      {DiffVariable(0), DiffVariable(0, DerivativeOperator::delta(0)),
       DiffVariable(1, DerivativeOperator::delta(0)), DiffVariable(2, DerivativeOperator::delta(0))},
      r);
  const auto I = algebra::groebner_basis(Ps(b, {"x-t", "x'-1", "y'"}), ring);
  const auto J = algebra::groebner_basis(Ps(b, {"x'", "z'+y'"}), ring);
  const auto G = algebra::intersect(I, J);
  const auto expected = algebra::groebner_basis(
      Ps(b, {"(x-t)*x'", "x'*(x'-1)", "x'*y'", "(x-t)*(z'+y')", "x'*z'-(z'+y')", "y'*(z'+y')"}), ring);
  CHECK(G == expected);
  CHECK(G.generators.size() == 6);
}

TEST_CASE("elimination keeps the trailing variables") {
  const auto b = fixtures::ordinary({"x", "y", "z"});
  const auto r = Ranking::orderly(b);
  const auto F = Ps(b, {"z - x*y", "y - x^2"});
  const auto G = algebra::groebner_basis(F, algebra::ring_of(F, r));
  const auto E = algebra::eliminate(G, {DiffVariable(0), DiffVariable(2)});
  REQUIRE(E.generators.size() == 1);
  CHECK(E.diff_generators()[0] == P(b, "z - x^3"));
}

TEST_CASE("finite rings convert both ways") {
  const auto b = fixtures::xyz_over_t();
  const auto r = Ranking::orderly(b);
  fixtures::RandomPolys gen(41, b);
  for (int k = 0; k < 50; ++k) {
    const auto f = gen.poly();
    const auto ring = algebra::ring_of({f}, r);
    CHECK(ring.to_diff(ring.from_diff(f)) == f);
    for (std::size_t i = 1; i < ring.size(); ++i) CHECK(r.less(ring.variables()[i], ring.variables()[i - 1]));
  }
  const auto ring = algebra::ring_of({P(b, "x")}, r);
  CHECK_THROWS_AS((void)ring.from_diff(P(b, "y")), std::invalid_argument);
}

TEST_CASE("trivial ideals") {
  const auto b = fixtures::ordinary({"x"});
  const auto F = Ps(b, {"x", "x-1"});
  const auto G = algebra::groebner_basis(F, algebra::ring_of(F, Ranking::orderly(b)));
  CHECK(algebra::is_trivial(G));
  CHECK(algebra::contains(G, P(b, "x^5 + 7")));
}
