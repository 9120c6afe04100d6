#include "kolchin/cli.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace kolchin::cli {

namespace {

using nlohmann::json;

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
  });
}

std::vector<std::string> names(const json& doc, const char* key, bool required) {
  if (!doc.contains(key)) {
    if (required) throw UsageError(std::string("missing field \"") + key + "\"");
    return {};
  }
  const json& v = doc.at(key);
  if (!v.is_array()) throw UsageError(std::string("field \"") + key + "\" must be a list");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) throw UsageError(std::string("field \"") + key + "\" must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

void parse_ranking(const json& v, RankingSpec& spec) {
  if (v.is_string()) {
    spec.kind = v.get<std::string>();
    return;
  }
  if (!v.is_object()) throw UsageError("field \"ranking\" must be a string or an object");
  for (const auto& [key, value] : v.items()) {
    if (key == "kind") {
      spec.kind = value.get<std::string>();
    } else if (key == "priority") {
      spec.priority = value.get<std::vector<std::string>>();
    } else if (key == "tie_break") {
      spec.tie_break = value.get<std::string>();
    } else if (key == "blocks") {
      spec.blocks = value.get<std::vector<std::vector<std::string>>>();
    } else {
      throw UsageError("unknown ranking field \"" + key + "\"");
    }
  }
}

}  // namespace

SystemDescription parse_system(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("malformed document: ") + e.what(), line, column);
  }
  if (!doc.is_object()) throw UsageError("the system document must be a json object");

  SystemDescription sys;
  try {
    static const std::set<std::string> known{"derivations", "indeterminates", "transcendentals",
                                             "ranking",     "polynomials",    "charset",
                                             "poly"};
    for (const auto& [key, value] : doc.items()) {
      if (!known.contains(key)) throw UsageError("unknown field \"" + key + "\"");
    }
    sys.derivations = names(doc, "derivations", true);
    sys.indeterminates = names(doc, "indeterminates", true);
    if (doc.contains("transcendentals")) {
      const json& t = doc.at("transcendentals");
      if (t.is_array()) {
        sys.transcendentals = names(doc, "transcendentals", false);
      } else if (t.is_object()) {
        for (const auto& [name, table] : t.items()) {
          sys.transcendentals.push_back(name);
          if (!table.is_object()) throw UsageError("derivative table of " + name + " must be an object");
          for (const auto& [d, expr] : table.items()) {
            sys.derivative_table[name][d] = expr.get<std::string>();
          }
        }
      } else {
        throw UsageError("field \"transcendentals\" must be a list or an object");
      }
    }
    if (doc.contains("ranking")) parse_ranking(doc.at("ranking"), sys.ranking);
    sys.polynomials = names(doc, "polynomials", false);
    sys.charset = names(doc, "charset", false);
    if (doc.contains("poly")) sys.poly = doc.at("poly").get<std::string>();
  } catch (const json::type_error& e) {
    throw UsageError(std::string("ill-typed field: ") + e.what());
  }

  std::set<std::string> seen;
  for (const auto* group : {&sys.derivations, &sys.indeterminates, &sys.transcendentals}) {
    for (const auto& name : *group) {
      if (!is_identifier(name)) throw UsageError("invalid name \"" + name + "\"");
      if (!seen.insert(name).second) throw UsageError("duplicate name \"" + name + "\"");
    }
  }
  if (sys.derivations.size() > 1) {
    for (const auto& y : sys.indeterminates) {
      for (const auto& d : sys.derivations) {
        if (y.starts_with(d) || d.starts_with(y)) {
          throw UsageError("indeterminate \"" + y + "\" and derivation \"" + d +
                           "\" share a prefix");
        }
      }
    }
  }
  for (const auto& [t, table] : sys.derivative_table) {
    for (const auto& [d, expr] : table) {
      if (std::find(sys.derivations.begin(), sys.derivations.end(), d) == sys.derivations.end()) {
        throw UsageError("derivative table of " + t + " names undeclared derivation \"" + d + "\"");
      }
    }
  }

  try {
    const auto provisional =
        DerivationBasis::make(sys.derivations, sys.indeterminates, sys.transcendentals);
    std::vector<std::vector<Scalar>> table;
    for (const auto& t : sys.transcendentals) {
      std::vector<Scalar> row;
      for (const auto& d : sys.derivations) {
        auto it = sys.derivative_table.find(t);
        if (it == sys.derivative_table.end() || !it->second.contains(d)) {
          row.emplace_back(0);
          continue;
        }
        try {
          row.push_back(parse_scalar(it->second.at(d), *provisional));
        } catch (const ParseError& e) {
          throw ParseError("derivative of " + t + " by " + d + ": " + e.what(), e.line(),
                           e.column());
        }
      }
      table.push_back(std::move(row));
    }
    sys.basis = DerivationBasis::make(sys.derivations, sys.indeterminates, sys.transcendentals,
                                      std::move(table));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  (void)sys.make_ranking();
  for (std::size_t i = 0; i < sys.polynomials.size(); ++i) {
    sys.parsed.push_back(
        parse_in(sys, sys.polynomials[i], "polynomials[" + std::to_string(i) + "]"));
  }
  return sys;
}

DiffPolynomial parse_in(const SystemDescription& system, const std::string& source,
                        const std::string& label) {
  try {
    return parse_polynomial(source, *system.basis);
  } catch (const ParseError& e) {
    throw ParseError(label + ": " + e.what(), e.line(), e.column());
  }
}

Ranking SystemDescription::make_ranking() const {
  auto index_of = [this](const std::string& name) {
    auto it = std::find(indeterminates.begin(), indeterminates.end(), name);
    if (it == indeterminates.end()) {
      throw UsageError("ranking names undeclared indeterminate \"" + name + "\"");
    }
    return static_cast<int>(it - indeterminates.begin());
  };
  std::vector<int> priority;
  if (ranking.priority.empty()) {
    for (int i = 0; i < static_cast<int>(indeterminates.size()); ++i) priority.push_back(i);
  } else {
    for (const auto& name : ranking.priority) priority.push_back(index_of(name));
  }
  TieBreak tie;
  if (ranking.tie_break == "lex") {
    tie = TieBreak::lex;
  } else if (ranking.tie_break == "revlex") {
    tie = TieBreak::revlex;
  } else {
    throw UsageError("unknown tie-break \"" + ranking.tie_break + "\" (lex or revlex)");
  }
  RankingKind kind;
  if (ranking.kind == "orderly") {
    kind = RankingKind::orderly;
  } else if (ranking.kind == "elimination") {
    kind = RankingKind::elimination;
  } else if (ranking.kind == "block") {
    kind = RankingKind::block;
  } else {
    throw UsageError("unknown ranking kind \"" + ranking.kind + "\"");
  }
  std::vector<std::vector<int>> blocks;
  for (const auto& b : ranking.blocks) {
    std::vector<int> ids;
    for (const auto& name : b) ids.push_back(index_of(name));
    blocks.push_back(std::move(ids));
  }
  if (kind != RankingKind::block && !blocks.empty()) {
    throw UsageError("blocks are only allowed for a block ranking");
  }
  try {
    return Ranking(basis, kind, std::move(priority), tie, std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed ranking: ") + e.what());
  }
}

}  // namespace kolchin::cli
