#pragma once

#include "kolchin/diffpoly.hpp"
#include "kolchin/parse.hpp"

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kolchin::cli {

inline constexpr const char* kVersion = "kolchin 1.0.0";

/// Bad command line or document structure; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RankingSpec {
  std::string kind = "orderly";
  std::vector<std::string> priority;  // lowest first; empty means declaration order
  std::string tie_break = "lex";
  std::vector<std::vector<std::string>> blocks;
};

struct SystemDescription {
  std::vector<std::string> derivations;
  std::vector<std::string> indeterminates;
  std::vector<std::string> transcendentals;
  std::map<std::string, std::map<std::string, std::string>> derivative_table;
  RankingSpec ranking;
  std::vector<std::string> polynomials;
  std::vector<std::string> charset;
  std::optional<std::string> poly;

  BasisPtr basis;
  std::vector<DiffPolynomial> parsed;

  Ranking make_ranking() const;
};

/// Parses and validates a json system document. Syntax errors raise
/// ParseError with line and column; structural ones raise UsageError.
SystemDescription parse_system(std::string_view text);

/// Parses a polynomial of the system, prefixing errors with a label.
DiffPolynomial parse_in(const SystemDescription& system, const std::string& source,
                        const std::string& label);

enum class Format { json, text };

/// Content in the leader pulled out, e.g. "(x-t)*(z'+y')".
std::string factored_string(const DiffPolynomial& f, const Ranking& r);

/// json: sorted keys, two-space indent, trailing newline. text: one
/// "path: value" line per leaf; with a ranking, polynomial lists are
/// re-parsed and printed factored.
std::string format_output(const nlohmann::json& doc, Format format,
                          const Ranking* ranking = nullptr);

/// Full command-line entry point; returns the exit status (0 success,
/// 1 mathematical failure, 2 usage or parse error).
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kolchin::cli
