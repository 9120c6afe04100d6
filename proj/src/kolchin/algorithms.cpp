#include "kolchin/kolchin.hpp"

#include "../util/parallel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kolchin {

namespace {

std::string describe_failures(const VerificationReport& report) {
  std::string text = "charset verification failed";
  for (const auto& f : report.failures) text += "; " + f;
  return text;
}

struct Truncation {
  algebra::GroebnerBasis ideal;
  std::size_t prolongations = 0;
};

Truncation truncate_ideal(const CharDecomposition& D, const algebra::FiniteRing& ring, int h,
                          unsigned threads) {
  std::vector<Prolongation> parts(D.components.size());
  detail::parallel_for(parts.size(), threads, [&](std::size_t i) {
    parts[i] = prolong_saturate(D.components[i], h, ring);
  });
  Truncation out;
  std::vector<algebra::GroebnerBasis> ideals;
  for (auto& p : parts) {
    out.prolongations += p.prolongations;
    ideals.push_back(std::move(p.ideal));
  }
  out.ideal = intersect_components(ideals);
  return out;
}

int max_order(const CharDecomposition& D) {
  int h = 0;
  for (const auto& c : D.components) {
    for (const auto& e : c.charset.elements()) h = std::max(h, e.order());
  }
  return h;
}

VerificationReport verify_impl(const AutoreducedSet& C, const std::vector<DiffPolynomial>& F,
                               const CharDecomposition& D, const CharDecomposition& orderly,
                               const algebra::GroebnerBasis* truncation, int h_check) {
  VerificationReport report;
  const Ranking& r = C.ranking();
  auto fail = [&report](std::string why) { report.failures.push_back(std::move(why)); };

  // (i)
  report.autoreduced = true;
  for (std::size_t i = 0; i < C.size() && report.autoreduced; ++i) {
    for (std::size_t j = 0; j < C.size(); ++j) {
      if (i != j && !is_reduced(C[i], C[j], r)) {
        report.autoreduced = false;
        fail("not differentially autoreduced: " + to_string(C[i], r) + " against " +
             to_string(C[j], r));
        break;
      }
    }
  }
  // (ii)
  report.in_ideal = true;
  for (const auto& c : C.elements()) {
    if (!radical_membership(c, D).member) {
      report.in_ideal = false;
      fail("not in the ideal: " + to_string(c, r));
    }
  }
  // (iii)
  report.generators_reduce = true;
  for (const auto& f : F) {
    if (!full_remainder(f, C).remainder.is_zero()) {
      report.generators_reduce = false;
      fail("generator does not reduce to zero: " + to_string(f, r));
    }
  }
  // (iv)
  std::set<DiffVariable> available;
  for (const auto& comp : D.components) {
    for (const auto& u : comp.charset.leaders()) available.insert(u);
  }
  report.leader_inclusion = true;
  for (const auto& u : C.leaders()) {
    if (!available.contains(u)) {
      report.leader_inclusion = false;
      fail("leader outside every component: " + to_string(u, r.basis()));
    }
  }
  // (v)
  try {
    report.consistent = component_is_consistent(C);
    if (!report.consistent) fail("1 lies in (C):H_C^infinity");
  } catch (const std::invalid_argument& e) {
    report.consistent = false;
    fail(e.what());
  }
  // (vi)
  report.truncation_order = h_check;
  algebra::GroebnerBasis computed;
  if (!truncation) {
    const auto ring = order_ring(orderly.ranking->orderly_companion(), h_check);
    computed = truncate_ideal(orderly, ring, h_check, 1).ideal;
    truncation = &computed;
  }
  report.truncation = true;
  for (const auto& g : truncation->diff_generators()) {
    if (!full_remainder(g, C).remainder.is_zero()) {
      report.truncation = false;
      fail("ideal element of order <= " + std::to_string(h_check) +
           " does not reduce to zero: " + to_string(g, r));
      break;
    }
  }
  return report;
}

CharDecomposition decompose_nonempty(const std::vector<DiffPolynomial>& F, const Ranking& r,
                                     const DecompositionOptions& options) {
  auto D = chi_decomposition(F, r, options);
  if (D.unit_ideal()) throw MathError("unit ideal");
  return D;
}

AutoreducedSet lowest_subset(const AutoreducedSet& algebraic) {
  if (algebraic.empty()) return {{}, algebraic.ranking()};
  return lowest_diff_autoreduced_subset(algebraic);
}

}  // namespace

VerificationError::VerificationError(VerificationReport report)
    : MathError(describe_failures(report)), report_(std::move(report)) {}

VerificationReport verify_charset(const AutoreducedSet& C, const std::vector<DiffPolynomial>& F,
                                  const CharDecomposition& D, int min_truncation,
                                  const DecompositionOptions& options) {
  if (!D.ranking) throw std::invalid_argument("decomposition without a ranking");
  if (D.unit_ideal()) throw MathError("unit ideal");
  const CharDecomposition orderly =
      D.ranking->is_orderly() ? D : decompose_nonempty(F, D.ranking->orderly_companion(), options);
  const int h_check =
      std::max(min_truncation, order_bound(orderly, BoundMode::component_order_sum).value);
  return verify_impl(C, F, D, orderly, nullptr, h_check);
}

CharsetResult charset_ordinary(const std::vector<DiffPolynomial>& F, const Ranking& r,
                               const CharsetOptions& options) {
  if (!r.basis().is_ordinary()) {
    throw std::invalid_argument("the ordinary algorithm needs exactly one derivation");
  }
  if (!r.is_orderly()) throw std::invalid_argument("the ordinary algorithm needs an orderly ranking");
  CharsetResult result;
  result.decomposition = decompose_nonempty(F, r, options.decomposition);
  auto& cert = result.certificate;
  cert.algorithm = "ordinary";
  cert.bound = order_bound(result.decomposition, BoundMode::component_order_sum);
  cert.components = result.decomposition.components.size();
  const auto ring = order_ring(r, cert.bound.value);
  cert.ring_dimension = ring.size();
  auto trunc = truncate_ideal(result.decomposition, ring, cert.bound.value, options.threads);
  cert.prolongations = trunc.prolongations;
  cert.intersection = std::move(trunc.ideal);
  result.charset = lowest_subset(algebraic_charset(cert.intersection, r));
  cert.verification = verify_impl(result.charset, F, result.decomposition, result.decomposition,
                                  &cert.intersection, cert.bound.value);
  if (!cert.verification.ordinary_ok()) throw VerificationError(cert.verification);
  return result;
}

CharsetResult charset_consistent(const std::vector<DiffPolynomial>& F, const Ranking& r,
                                 const CharsetOptions& options) {
  CharsetResult result;
  result.decomposition = decompose_nonempty(F, r, options.decomposition);
  auto& cert = result.certificate;
  cert.bound = order_bound(result.decomposition, BoundMode::max_element_order);

  CharDecomposition orderly;
  int ring_order = cert.bound.value;
  if (r.is_orderly()) {
    cert.algorithm = "consistent-orderly";
    orderly = result.decomposition;
  } else {
    cert.algorithm = "consistent-arbitrary";
    orderly = decompose_nonempty(F, r.orderly_companion(), options.decomposition);
    ring_order = std::max(ring_order, max_order(orderly));
  }
  cert.components = orderly.components.size();
  const auto ring = order_ring(r, ring_order);
  cert.ring_dimension = ring.size();
  auto trunc = truncate_ideal(orderly, ring, ring_order, options.threads);
  cert.prolongations = trunc.prolongations;
  cert.intersection = std::move(trunc.ideal);
  result.charset = lowest_subset(algebraic_charset(cert.intersection, r));

  const int sum_bound = order_bound(orderly, BoundMode::component_order_sum).value;
  if (sum_bound <= ring_order && r.is_orderly()) {
    cert.verification = verify_impl(result.charset, F, result.decomposition, orderly,
                                     &cert.intersection, ring_order);
  } else {
    cert.verification = verify_impl(result.charset, F, result.decomposition, orderly, nullptr,
                                     std::max(ring_order, sum_bound));
  }
  if (!cert.verification.all_ok()) throw VerificationError(cert.verification);
  return result;
}

}  // namespace kolchin
