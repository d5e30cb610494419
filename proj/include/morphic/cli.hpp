#pragma once

// Command-line front end: argument parsing, spec loading, and report emission.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "morphic/analyze.hpp"
#include "morphic/corpus.hpp"
#include "morphic/dsl.hpp"
#include "morphic/taxonomy.hpp"
#include "morphic/wordspec.hpp"

namespace morphic::cli {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr const char* kBudgetEnv = "MORPHIC_BUDGET";
// Text reports list at most this many occurrences; JSON lists all of them.
inline constexpr std::size_t kTextListLimit = 20;

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsage = 2 };

// Raised for bad flags, unreadable files and malformed values.
class UsageError : public Error {
 public:
  using Error::Error;
};

using nlohmann::json;

namespace detail {

inline std::size_t default_budget(std::size_t fallback) {
  const char* raw = std::getenv(kBudgetEnv);
  if (!raw || !*raw) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string_view(raw).size() || v == 0) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string(kBudgetEnv) + " must be a positive integer, got '" + raw + "'");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json occurrences_json(const std::vector<Occurrence>& hits) {
  json arr = json::array();
  for (const auto& h : hits) arr.push_back({{"position", h.position}, {"period", h.period}});
  return arr;
}

// Splits "K,P" into two positive integers.
inline std::pair<std::size_t, std::size_t> parse_pair(const std::string& s, const std::string& flag) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t a_used = 0, b_used = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    const auto x = std::stoull(a, &a_used);
    const auto y = std::stoull(b, &b_used);
    if (a_used != a.size() || b_used != b.size()) throw std::invalid_argument(s);
    return {static_cast<std::size_t>(x), static_cast<std::size_t>(y)};
  } catch (const std::exception&) {
    throw UsageError(flag + " expects K,P with two integers, got '" + s + "'");
  }
}

inline taxonomy::PropertyAssignment parse_evidence(const std::string& text) {
  taxonomy::PropertyAssignment a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("evidence item '" + item + "' is not of the form P<i>=true|false");
    const auto prop = taxonomy::parse_property(item.substr(0, eq));
    const std::string value = item.substr(eq + 1);
    if (!prop) throw UsageError("unknown property '" + item.substr(0, eq) + "'");
    if (value != "true" && value != "false") throw UsageError("evidence value must be true or false, got '" + value + "'");
    a.set(*prop, value == "true");
  }
  return a;
}

inline json assignment_json(const taxonomy::PropertyAssignment& a) {
  json obj = json::object();
  for (std::size_t i = 0; i < taxonomy::kPropertyCount; ++i) {
    const auto t = a.at(i);
    obj[taxonomy::property_tag(i)] = t == taxonomy::Truth::Unknown ? json(nullptr) : json(t == taxonomy::Truth::True);
  }
  return obj;
}

inline json envelope(std::string command, json input, json results, json budgets) {
  return {{"command", std::move(command)},
          {"input", std::move(input)},
          {"results", std::move(results)},
          {"budgets", std::move(budgets)},
          {"version", std::string(kVersion)}};
}

struct LoadedSpec {
  dsl::SpecDocument doc;
  WordSpecPtr spec;
};

inline LoadedSpec load_spec(const std::string& path) {
  auto doc = dsl::parse_spec(read_file(path));
  auto spec = dsl::to_word_spec(doc);
  return {std::move(doc), std::move(spec)};
}

}  // namespace detail

struct Options {
  std::string format = "text";
  std::string spec_path;
  std::size_t length = 0;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> complexity;
  std::optional<std::string> powers;
  std::optional<std::size_t> overlaps;
  std::optional<std::string> gaps;
  bool freq = false;
  std::string evidence;
  std::string label;
};

namespace detail {

inline int cmd_gen(const Options& o, std::ostream& out) {
  const std::size_t budget = o.budget.value_or(default_budget(kDefaultPrefixBudget));
  const auto loaded = load_spec(o.spec_path);
  const Sequence s = materialize(*loaded.spec, o.length, budget);
  if (o.format == "json") {
    out << envelope("gen", {{"spec", o.spec_path}, {"length", o.length}},
                    {{"alphabet", s.alphabet.letters()}, {"prefix", s.str()}}, {{"prefix", budget}})
               .dump(2)
        << "\n";
  } else {
    out << s.str() << "\n";
  }
  return kOk;
}

inline int cmd_analyze(const Options& o, std::ostream& out) {
  const std::size_t budget = o.budget.value_or(default_budget(kDefaultPrefixBudget));
  const auto loaded = load_spec(o.spec_path);
  const Sequence s = materialize(*loaded.spec, o.length, budget);
  json results = json::object();
  std::ostringstream text;
  text << "length: " << s.size() << "\n";

  if (o.complexity) {
    const auto p = factor_complexity(s.word, *o.complexity);
    results["complexity"] = p.values;
    text << "complexity:";
    for (auto v : p.values) text << " " << v;
    text << "\n";
  }
  if (o.powers) {
    const auto [k, max_period] = parse_pair(*o.powers, "--powers");
    const auto hits = find_k_powers(s.word, k, max_period);
    results["powers"] = {{"k", k}, {"max_period", max_period}, {"occurrences", occurrences_json(hits)}};
    text << "powers(k=" << k << ", period<=" << max_period << "): " << hits.size() << "\n";
    for (std::size_t i = 0; i < hits.size() && i < kTextListLimit; ++i)
      text << "  at " << hits[i].position << " period " << hits[i].period << ": "
           << render(s.alphabet, std::span<const Letter>(s.word).subspan(hits[i].position, k * hits[i].period)) << "\n";
    if (hits.size() > kTextListLimit) text << "  ...\n";
  }
  if (o.overlaps) {
    const auto hits = find_overlaps(s.word, *o.overlaps);
    results["overlaps"] = {{"max_period", *o.overlaps}, {"occurrences", occurrences_json(hits)}};
    text << "overlaps(period<=" << *o.overlaps << "): " << hits.size() << "\n";
    for (std::size_t i = 0; i < hits.size() && i < kTextListLimit; ++i)
      text << "  at " << hits[i].position << " period " << hits[i].period << "\n";
    if (hits.size() > kTextListLimit) text << "  ...\n";
  }
  if (o.gaps) {
    std::vector<std::string> tokens;
    for (const auto& t : dsl::detail::split(*o.gaps)) tokens.emplace_back(t.text);
    if (tokens.size() == 1 && s.alphabet.single_char()) {
      const std::string chars = tokens.front();
      tokens.clear();
      for (char c : chars) tokens.emplace_back(1, c);
    }
    const Word x = make_word(s.alphabet, tokens);
    const auto r = gap_report(s.word, x);
    results["gaps"] = {{"factor", render(s.alphabet, x)},
                       {"occurrences", r.positions.size()},
                       {"first_positions", std::vector<std::size_t>(r.positions.begin(),
                                                                    r.positions.begin() + static_cast<std::ptrdiff_t>(
                                                                        std::min<std::size_t>(r.positions.size(), 16)))},
                       {"max_gap", r.max_gap ? json(*r.max_gap) : json(nullptr)}};
    text << "gaps(" << render(s.alphabet, x) << "): " << r.positions.size() << " occurrences, max gap "
         << (r.max_gap ? std::to_string(*r.max_gap) : "n/a") << "\n";
  }
  if (o.freq) {
    // Theoretical values exist for an uncoded, unpatched primitive fixed point.
    std::optional<Morphism> m;
    if (loaded.doc.coding.empty() && loaded.doc.pipeline.empty()) {
      auto candidate = dsl::to_morphism(loaded.doc);
      if (primitivity(candidate)) m = std::move(candidate);
    }
    const auto r = letter_frequency(s.alphabet.size(), s.word, m);
    json letters = json::object();
    text << "frequencies:\n";
    for (Letter a = 0; a < s.alphabet.size(); ++a) {
      json row = {{"count", r.counts[a]}, {"empirical", r.empirical(a)}};
      text << "  " << s.alphabet.name(a) << ": " << r.empirical(a);
      if (r.theoretical) {
        row["theoretical"] = (*r.theoretical)[a];
        text << " (Perron " << (*r.theoretical)[a] << ")";
      }
      text << "\n";
      letters[s.alphabet.name(a)] = row;
    }
    results["frequencies"] = {{"letters", letters},
                              {"perron_iterations", r.theoretical ? json(r.iterations) : json(nullptr)},
                              {"perron_residual", r.theoretical ? json(r.residual) : json(nullptr)}};
  }

  if (o.format == "json") {
    json input = {{"spec", o.spec_path}, {"length", o.length}};
    if (o.complexity) input["complexity"] = *o.complexity;
    if (o.powers) input["powers"] = *o.powers;
    if (o.overlaps) input["overlaps"] = *o.overlaps;
    if (o.gaps) input["gaps"] = *o.gaps;
    if (o.freq) input["freq"] = true;
    out << envelope("analyze", input, results, {{"prefix", budget}}).dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kOk;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
  const auto evidence = parse_evidence(o.evidence);
  const auto r = taxonomy::classify_evidence(evidence);
  if (o.format == "json") {
    json classes = json::array();
    for (char c : r.labels) classes.push_back(std::string(1, c));
    json results = {{"closure", assignment_json(r.closed.assignment)},
                    {"contradiction", r.closed.ok() ? json(nullptr) : json(r.closed.contradiction->describe())},
                    {"classes", classes}};
    out << envelope("classify", {{"evidence", o.evidence}}, results, json::object()).dump(2) << "\n";
  } else {
    if (!r.closed.ok()) {
      out << r.closed.contradiction->describe() << "\n";
    } else {
      out << "closure: " << r.closed.assignment.to_string() << "\n";
      out << "classes:";
      for (char c : r.labels) out << " (" << c << ")";
      out << "\n";
    }
  }
  return r.closed.ok() ? kOk : kAssertionFailed;
}

inline int cmd_taxonomy(const Options& o, std::ostream& out) {
  json results = json::array();
  for (const auto& a : taxonomy::enumerate_classes()) {
    const char label = taxonomy::class_label(a);
    const auto& clause = *std::find_if(taxonomy::class_clauses().begin(), taxonomy::class_clauses().end(),
                                       [&](const auto& c) { return c.label == label; });
    results.push_back({{"label", std::string(1, label)},
                       {"description", std::string(clause.description)},
                       {"assignment", assignment_json(a)}});
  }
  std::sort(results.begin(), results.end(), [](const json& x, const json& y) { return x["label"] < y["label"]; });
  if (o.format == "json") {
    out << envelope("taxonomy enumerate", json::object(), results, json::object()).dump(2) << "\n";
  } else {
    for (const auto& r : results)
      out << "(" << r["label"].get<std::string>() << ") " << r["description"].get<std::string>() << "\n";
    out << results.size() << " classes\n";
  }
  return kOk;
}

inline json entry_json(const corpus::CorpusEntry& e) {
  return {{"key", e.key},
          {"label", e.label ? json(std::string(1, *e.label)) : json(nullptr)},
          {"symbol", e.symbol},
          {"title", e.title},
          {"construction", describe(*e.spec)}};
}

inline int cmd_corpus_list(const Options& o, std::ostream& out) {
  json results = json::array();
  for (const auto& e : corpus::list_entries()) results.push_back(entry_json(e));
  if (o.format == "json") {
    out << envelope("corpus list", json::object(), results, json::object()).dump(2) << "\n";
  } else {
    for (const auto& e : corpus::list_entries())
      out << (e.label ? "(" + std::string(1, *e.label) + ")" : std::string("   ")) << " " << e.key << ": " << e.title
          << "\n";
  }
  return kOk;
}

inline int cmd_corpus_verify(const Options& o, std::ostream& out) {
  const std::size_t budget = o.budget.value_or(default_budget(corpus::kDefaultBudget));
  std::vector<const corpus::CorpusEntry*> selected;
  if (o.label.empty()) {
    for (const auto& e : corpus::list_entries()) selected.push_back(&e);
  } else if (const auto* e = corpus::find_entry(o.label)) {
    selected.push_back(e);
  } else {
    throw UsageError("no corpus entry '" + o.label + "'");
  }
  json results = json::array();
  bool all = true;
  std::ostringstream text;
  for (const auto* e : selected) {
    const auto report = corpus::verify(*e, budget);
    all = all && report.passed();
    json assertions = json::array();
    text << e->key << ": " << (report.passed() ? "pass" : "FAIL") << "\n";
    for (const auto& a : report.outcomes) {
      assertions.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
      text << "  [" << (a.passed ? "ok" : "FAIL") << "] " << a.name;
      if (!a.detail.empty()) text << " -- " << a.detail;
      text << "\n";
    }
    results.push_back({{"key", e->key}, {"passed", report.passed()}, {"assertions", assertions}});
  }
  if (o.format == "json") {
    out << envelope("corpus verify", {{"label", o.label.empty() ? json(nullptr) : json(o.label)}}, results,
                    {{"prefix", budget}})
               .dump(2)
        << "\n";
  } else {
    out << text.str();
  }
  return all ? kOk : kAssertionFailed;
}

}  // namespace detail

// Runs one invocation; `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Generate and analyze morphic words", "morphic"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.set_version_flag("--version", std::string(kVersion));

  auto* gen = app.add_subcommand("gen", "Emit a prefix of the word described by a spec file");
  gen->add_option("--spec", o.spec_path, "Spec file")->required();
  gen->add_option("--length", o.length, "Prefix length")->required();
  gen->add_option("--budget", o.budget, "Maximum prefix length");

  auto* analyze = app.add_subcommand("analyze", "Report statistics on a prefix");
  analyze->add_option("--spec", o.spec_path, "Spec file")->required();
  analyze->add_option("--length", o.length, "Prefix length")->required();
  analyze->add_option("--budget", o.budget, "Maximum prefix length");
  analyze->add_option("--complexity", o.complexity, "Factor complexity p(1..M)");
  analyze->add_option("--powers", o.powers, "k-th powers with period <= P, given as K,P");
  analyze->add_option("--overlaps", o.overlaps, "Overlaps with period <= P");
  analyze->add_option("--gaps", o.gaps, "Occurrences and gaps of a factor");
  analyze->add_flag("--freq", o.freq, "Letter frequencies");

  auto* classify = app.add_subcommand("classify", "Close evidence and list the classes it allows");
  classify->add_option("--evidence", o.evidence, "e.g. P1=true,P10=false")->required();

  auto* taxonomy_cmd = app.add_subcommand("taxonomy", "Property taxonomy");
  taxonomy_cmd->require_subcommand(1);
  auto* enumerate = taxonomy_cmd->add_subcommand("enumerate", "List the consistent classes");

  auto* corpus_cmd = app.add_subcommand("corpus", "Built-in example words");
  corpus_cmd->require_subcommand(1);
  auto* list = corpus_cmd->add_subcommand("list", "List entries");
  auto* verify = corpus_cmd->add_subcommand("verify", "Run entry assertions");
  verify->add_option("label", o.label, "Entry key; all entries when omitted");
  verify->add_option("--budget", o.budget, "Cap on every prefix length");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen->parsed()) return detail::cmd_gen(o, out);
    if (analyze->parsed()) return detail::cmd_analyze(o, out);
    if (classify->parsed()) return detail::cmd_classify(o, out);
    if (enumerate->parsed()) return detail::cmd_taxonomy(o, out);
    if (list->parsed()) return detail::cmd_corpus_list(o, out);
    if (verify->parsed()) return detail::cmd_corpus_verify(o, out);
  } catch (const dsl::ParseError& e) {
    err << o.spec_path << ":" << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace morphic::cli
