#include "kolchin/cli.hpp"
#include "kolchin/kolchin.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace kolchin::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::string input = "-";
  std::string ranking;
  std::string format = "json";
  bool assume_consistent = false;
  std::string poly;
  std::vector<std::string> charset;
  bool timing = false;
  unsigned threads = 0;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read input file \"" + path + "\"");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

unsigned thread_count(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("KOLCHIN_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw UsageError("KOLCHIN_THREADS must be a positive integer");
  }
  return 1;
}

json strings(const std::vector<DiffPolynomial>& polys, const Ranking& r) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(to_string(p, r));
  return out;
}

json ranking_json(const Ranking& r) {
  const auto& names = r.basis().indeterminates();
  json j;
  j["kind"] = r.kind() == RankingKind::orderly       ? "orderly"
              : r.kind() == RankingKind::elimination ? "elimination"
                                                     : "block";
  j["tie_break"] = r.tie_break() == TieBreak::lex ? "lex" : "revlex";
  json priority = json::array();
  for (int i : r.priority()) priority.push_back(names[static_cast<std::size_t>(i)]);
  j["priority"] = priority;
  if (r.kind() == RankingKind::block) {
    json blocks = json::array();
    for (const auto& b : r.blocks()) {
      json block = json::array();
      for (int i : b) block.push_back(names[static_cast<std::size_t>(i)]);
      blocks.push_back(block);
    }
    j["blocks"] = blocks;
  }
  return j;
}

json decomposition_json(const CharDecomposition& D, const Ranking& r) {
  json comps = json::array();
  for (const auto& c : D.components) {
    comps.push_back({{"charset", strings(c.charset.elements(), r)},
                     {"multipliers", strings(c.multipliers, r)}});
  }
  return comps;
}

json report_json(const VerificationReport& v) {
  return {{"autoreduced", v.autoreduced},
          {"in_ideal", v.in_ideal},
          {"generators_reduce", v.generators_reduce},
          {"leader_inclusion", v.leader_inclusion},
          {"consistent", v.consistent},
          {"truncation", v.truncation},
          {"truncation_order", v.truncation_order},
          {"failures", v.failures}};
}

json certificate_json(const CharsetCertificate& c, const Ranking& r) {
  return {{"algorithm", c.algorithm},
          {"bound",
           {{"mode", to_string(c.bound.mode)},
            {"value", c.bound.value},
            {"component", c.bound.component + 1}}},
          {"ring_dimension", c.ring_dimension},
          {"prolongations", c.prolongations},
          {"components", c.components},
          {"intersection", strings(c.intersection.diff_generators(), r)},
          {"verification", report_json(c.verification)}};
}

std::vector<DiffPolynomial> charset_candidates(const SystemDescription& sys,
                                               const Options& o) {
  const auto& sources = o.charset.empty() ? sys.charset : o.charset;
  if (sources.empty()) throw UsageError("no charset given (use --charset or a \"charset\" field)");
  std::vector<DiffPolynomial> out;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    out.push_back(parse_in(sys, sources[i], "charset[" + std::to_string(i) + "]"));
  }
  return out;
}

DiffPolynomial query_polynomial(const SystemDescription& sys, const Options& o) {
  if (!o.poly.empty()) return parse_in(sys, o.poly, "--poly");
  if (sys.poly) return parse_in(sys, *sys.poly, "poly");
  throw UsageError("no polynomial given (use --poly or a \"poly\" field)");
}

AutoreducedSet autoreduced(std::vector<DiffPolynomial> polys, const Ranking& r) {
  try {
    return {std::move(polys), r};
  } catch (const std::invalid_argument& e) {
    throw MathError(std::string("charset candidate rejected: ") + e.what());
  }
}

int execute(const Options& o, json& doc, std::optional<Ranking>& ranking_out) {
  SystemDescription sys = parse_system(read_input(o.input));
  if (!o.ranking.empty()) sys.ranking.kind = o.ranking;
  const Ranking r = sys.make_ranking();
  ranking_out = r;
  const unsigned threads = thread_count(o.threads);
  DecompositionOptions dopts;
  dopts.threads = threads;
  CharsetOptions copts;
  copts.decomposition = dopts;
  copts.threads = threads;

  doc["command"] = o.command;
  doc["version"] = kVersion;
  doc["ranking"] = ranking_json(r);
  doc["polynomials"] = strings(sys.parsed, r);

  if (o.command == "decompose") {
    const auto D = chi_decomposition(sys.parsed, r, dopts);
    doc["components"] = decomposition_json(D, r);
    doc["unit_ideal"] = D.unit_ideal();
    return 0;
  }
  if (o.command == "charset") {
    const bool ordinary = r.basis().is_ordinary() && r.is_orderly();
    if (!ordinary && !o.assume_consistent) {
      throw UsageError(
          "this system needs the consistency algorithm; pass --assume-consistent to assert the "
          "consistency property");
    }
    try {
      const CharsetResult res = o.assume_consistent ? charset_consistent(sys.parsed, r, copts)
                                                    : charset_ordinary(sys.parsed, r, copts);
      doc["charset"] = strings(res.charset.elements(), r);
      doc["certificate"] = certificate_json(res.certificate, r);
      doc["components"] = decomposition_json(res.decomposition, r);
      return 0;
    } catch (const VerificationError& e) {
      doc["error"] = "verification failed";
      doc["verification"] = report_json(e.report());
      throw;
    }
  }
  if (o.command == "member") {
    const auto f = query_polynomial(sys, o);
    const auto D = chi_decomposition(sys.parsed, r, dopts);
    const auto m = radical_membership(f, D);
    doc["poly"] = to_string(f, r);
    doc["member"] = D.unit_ideal() ? true : m.member;
    doc["per_component"] = m.per_component;
    doc["unit_ideal"] = D.unit_ideal();
    return 0;
  }
  if (o.command == "reduce") {
    const auto f = query_polynomial(sys, o);
    const auto A = autoreduced(charset_candidates(sys, o), r);
    const auto cert = full_remainder(f, A);
    doc["poly"] = to_string(f, r);
    doc["charset"] = strings(A.elements(), r);
    doc["remainder"] = to_string(cert.remainder, r);
    doc["multiplier"] = to_string(cert.multiplier(A), r);
    doc["initial_exponents"] = cert.initial_exponents;
    doc["separant_exponents"] = cert.separant_exponents;
    doc["verified"] = cert.verify(f, A);
    return 0;
  }
  if (o.command == "gb") {
    const auto ring = algebra::ring_of(sys.parsed, r);
    const auto G = algebra::groebner_basis(sys.parsed, ring);
    json vars = json::array();
    for (const auto& v : ring.variables()) vars.push_back(to_string(v, r.basis()));
    doc["ring"] = vars;
    doc["basis"] = strings(G.diff_generators(), r);
    return 0;
  }
  if (o.command == "verify") {
    const auto C = autoreduced(charset_candidates(sys, o), r);
    const auto D = chi_decomposition(sys.parsed, r, dopts);
    if (D.unit_ideal()) throw MathError("unit ideal");
    const auto report = verify_charset(C, sys.parsed, D, 0, dopts);
    doc["charset"] = strings(C.elements(), r);
    doc["verification"] = report_json(report);
    doc["verified"] = report.all_ok();
    return report.all_ok() ? 0 : 1;
  }
  throw UsageError("unknown command \"" + o.command + "\"");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("-i,--input", o.input, "System document (json); '-' reads stdin")
      ->capture_default_str();
  sub->add_option("-r,--ranking", o.ranking, "Ranking kind override")
      ->check(CLI::IsMember({"orderly", "elimination", "block"}));
  sub->add_option("-f,--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  sub->add_option("-t,--threads", o.threads, "Worker threads (default: KOLCHIN_THREADS or 1)");
  sub->add_flag("--timing", o.timing, "Report elapsed time");
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Kolchin characteristic sets of radical differential ideals", "kolchin"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1, 1);

  struct Spec {
    const char* name;
    const char* help;
    bool poly;
    bool charset;
  };
  const Spec specs[] = {
      {"decompose", "Characteristic decomposition of the system", false, false},
      {"charset", "Kolchin characteristic set of the radical ideal", false, false},
      {"member", "Radical membership test", true, false},
      {"reduce", "Full Ritt remainder with certificate", true, true},
      {"gb", "Reduced lex Groebner basis of the algebraic ideal", false, false},
      {"verify", "Check a candidate characteristic set", false, true},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, o);
    if (s.poly) sub->add_option("-p,--poly", o.poly, "Polynomial to test or reduce");
    if (s.charset) sub->add_option("-c,--charset", o.charset, "Charset element (repeatable)");
    if (std::string(s.name) == "charset") {
      sub->add_flag("--assume-consistent", o.assume_consistent,
                    "Assert the consistency property and use the max-order bound");
    }
    sub->callback([&o, sub] { o.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  json doc;
  std::optional<Ranking> ranking;
  const Format format = o.format == "text" ? Format::text : Format::json;
  auto emit = [&] {
    if (o.timing) {
      doc["elapsed_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    out << format_output(doc, format, ranking ? &*ranking : nullptr);
  };
  try {
    const int status = execute(o, doc, ranking);
    emit();
    return status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    if (!doc.empty()) {
      doc["error"] = doc.contains("error") ? doc["error"] : json(e.what());
      emit();
    }
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace kolchin::cli
