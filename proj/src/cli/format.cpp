#include "kolchin/cli.hpp"
#include "kolchin/mpoly.hpp"
#include "kolchin/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kolchin::cli {

namespace {

using nlohmann::json;

MPoly lcm(const MPoly& a, const MPoly& b) {
  const MPoly g = gcd(a, b);
  return a * *b.divide_exact(g);
}

// Base-field and derivative variables share one MPoly index space:
// transcendentals first, then the derivatives of f.
struct Encoding {
  int offset = 0;
  std::vector<DiffVariable> vars;

  MPoly encode(const DiffPolynomial& f, const MPoly& scale) const {
    MPoly out;
    const Scalar s(scale);
    for (const auto& t : f.terms()) {
      MPoly term = (t.coefficient * s).numerator();
      for (const auto& [v, e] : t.monomial) {
        const auto pos = std::find(vars.begin(), vars.end(), v) - vars.begin();
        term *= MPoly::variable(offset + static_cast<int>(pos), static_cast<int>(e));
      }
      out += term;
    }
    return out;
  }

  DiffPolynomial decode(const MPoly& p) const {
    DiffPolynomial out;
    for (const auto& t : p.terms()) {
      Scalar c(t.coefficient);
      DiffPolynomial term(1);
      for (const auto& [var, e] : t.monomial) {
        if (var < offset) {
          c *= Scalar(MPoly::variable(var, e));
        } else {
          term *= DiffPolynomial::variable(vars[static_cast<std::size_t>(var - offset)],
                                           static_cast<unsigned>(e));
        }
      }
      out += term.scaled(c);
    }
    return out;
  }
};

std::string wrapped(const DiffPolynomial& f, const Ranking& r) {
  std::string s = to_string(f, r);
  if (f.terms().size() > 1 || s.starts_with('-')) return "(" + s + ")";
  return s;
}

const std::set<std::string>& polynomial_keys() {
  static const std::set<std::string> keys{"charset",    "multipliers", "basis",
                                          "polynomials", "remainder",   "multiplier",
                                          "poly",        "intersection"};
  return keys;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string polynomial_text(const std::string& source, const Ranking* ranking) {
  if (!ranking) return source;
  try {
    return factored_string(parse_polynomial(source, ranking->basis()), *ranking);
  } catch (const ParseError&) {
    return source;
  }
}

void render(const std::string& path, const std::string& key, const json& v, const Ranking* ranking,
            std::ostringstream& out) {
  const bool poly = polynomial_keys().contains(key);
  if (v.is_object()) {
    for (const auto& [k, sub] : v.items()) render(path.empty() ? k : path + "." + k, k, sub, ranking, out);
    return;
  }
  if (v.is_array()) {
    const bool nested = std::any_of(v.begin(), v.end(),
                                    [](const json& x) { return x.is_object() || x.is_array(); });
    if (nested) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        render(path + "[" + std::to_string(i + 1) + "]", key, v[i], ranking, out);
      }
      return;
    }
    out << path << ":";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << (i == 0 ? " " : ", ");
      out << (poly && v[i].is_string() ? polynomial_text(v[i].get<std::string>(), ranking)
                                       : scalar_text(v[i]));
    }
    out << "\n";
    return;
  }
  out << path << ": "
      << (poly && v.is_string() ? polynomial_text(v.get<std::string>(), ranking) : scalar_text(v))
      << "\n";
}

}  // namespace

std::string factored_string(const DiffPolynomial& f, const Ranking& r) {
  if (f.is_constant()) return to_string(f, r);
  Encoding enc;
  enc.offset = r.basis().transcendental_count();
  enc.vars = f.variables();
  MPoly denominators(1);
  for (const auto& t : f.terms()) denominators = lcm(denominators, t.coefficient.denominator());
  const MPoly N = enc.encode(f, denominators);
  const auto leader = r.leader(f);
  const auto lpos = std::find(enc.vars.begin(), enc.vars.end(), leader) - enc.vars.begin();
  const MPoly content = content_in(N, enc.offset + static_cast<int>(lpos));
  const bool differential_factor =
      std::any_of(content.terms().begin(), content.terms().end(), [&enc](const MPoly::Term& t) {
        return std::any_of(t.monomial.begin(), t.monomial.end(),
                           [&enc](const auto& ve) { return ve.first >= enc.offset; });
      });
  if (!differential_factor) return to_string(f, r);
  const auto rest = N.divide_exact(content);
  if (!rest) return to_string(f, r);
  DiffPolynomial factor = enc.decode(content);
  DiffPolynomial cofactor = enc.decode(*rest).scaled(Scalar(MPoly(1), denominators));
  const Scalar lc = ranked_leading_coefficient(factor, r);
  factor = factor.scaled(lc.inverse());
  cofactor = cofactor.scaled(lc);
  if (!(factor * cofactor == f)) return to_string(f, r);
  return wrapped(factor, r) + "*" + wrapped(cofactor, r);
}

std::string format_output(const nlohmann::json& doc, Format format, const Ranking* ranking) {
  if (format == Format::json) return doc.dump(2) + "\n";
  std::ostringstream out;
  render("", "", doc, ranking, out);
  return out.str();
}

}  // namespace kolchin::cli
