#pragma once

// Line-oriented text format for morphisms, codings and word pipelines.
//
//   # Fibonacci word
//   alphabet: 0 1
//   rule 0 -> 0 1
//   rule 1 -> 0
//   seed: 0
//   coding: 0->a 1->b
//   values: 0=0 1=1
//   patch: 2 2
//   shift: 1
//
// `rule` lines may have an empty right-hand side (erasing rule). `patch`
// and `shift` are applied after the coding, in the order written.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphic/core.hpp"
#include "morphic/wordspec.hpp"

namespace morphic::dsl {

enum class ParseErrorKind {
  Syntax,
  UnknownDirective,
  MissingAlphabet,
  DuplicateDirective,
  DuplicateLetter,
  UndeclaredLetter,
  DuplicateRule,
  MissingRule,
  MissingSeed,
  BadCoding,
  BadValue,
};

inline std::string_view kind_name(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::UnknownDirective: return "unknown directive";
    case ParseErrorKind::MissingAlphabet: return "missing alphabet";
    case ParseErrorKind::DuplicateDirective: return "duplicate directive";
    case ParseErrorKind::DuplicateLetter: return "duplicate letter";
    case ParseErrorKind::UndeclaredLetter: return "undeclared letter";
    case ParseErrorKind::DuplicateRule: return "duplicate rule";
    case ParseErrorKind::MissingRule: return "missing rule";
    case ParseErrorKind::MissingSeed: return "missing seed";
    case ParseErrorKind::BadCoding: return "bad coding";
    case ParseErrorKind::BadValue: return "bad value";
  }
  return "error";
}

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& detail)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + std::string(kind_name(kind)) + ": " +
              detail),
        kind_(kind),
        line_(line),
        column_(column) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

struct PipelineStep {
  enum class Kind { Patch, Shift };
  Kind kind = Kind::Patch;
  std::vector<std::string> tokens;  // Patch
  std::size_t amount = 0;           // Shift

  friend bool operator==(const PipelineStep&, const PipelineStep&) = default;
};

struct SpecDocument {
  std::vector<std::string> alphabet;
  std::vector<std::vector<std::string>> rules;  // rules[i] is the image of alphabet[i]
  std::string seed;
  std::vector<std::pair<std::string, std::string>> coding;  // empty: no coding
  std::vector<std::pair<std::string, std::int64_t>> values;
  std::vector<PipelineStep> pipeline;

  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split(std::string_view line, std::size_t offset = 0) {
  std::vector<Token> out;
  std::size_t i = offset;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

inline SpecDocument parse_spec(std::string_view text) {
  using K = ParseErrorKind;
  SpecDocument doc;
  std::optional<std::size_t> alphabet_line, seed_line, coding_line, values_line;
  std::vector<std::optional<std::size_t>> rule_line;
  std::size_t line_no = 0;

  auto letter_index = [&](const detail::Token& t) -> std::size_t {
    auto it = std::find(doc.alphabet.begin(), doc.alphabet.end(), t.text);
    if (it == doc.alphabet.end())
      throw ParseError(K::UndeclaredLetter, line_no, t.column, "'" + std::string(t.text) + "' is not declared");
    return static_cast<std::size_t>(it - doc.alphabet.begin());
  };
  auto need_alphabet = [&](std::size_t column) {
    if (!alphabet_line) throw ParseError(K::MissingAlphabet, line_no, column, "declare the alphabet first");
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = detail::split(line);
    if (tokens.empty()) continue;
    const auto& head = tokens.front();

    if (head.text == "rule") {
      need_alphabet(head.column);
      if (tokens.size() < 3 || tokens[2].text != "->")
        throw ParseError(K::Syntax, line_no, head.column, "expected 'rule L -> L L ...'");
      const std::size_t lhs = letter_index(tokens[1]);
      if (rule_line[lhs])
        throw ParseError(K::DuplicateRule, line_no, tokens[1].column,
                         "letter '" + doc.alphabet[lhs] + "' already has a rule on line " +
                             std::to_string(*rule_line[lhs]));
      std::vector<std::string> rhs;
      for (std::size_t i = 3; i < tokens.size(); ++i) rhs.push_back(doc.alphabet[letter_index(tokens[i])]);
      doc.rules[lhs] = std::move(rhs);
      rule_line[lhs] = line_no;
      continue;
    }

    if (head.text.back() != ':')
      throw ParseError(K::UnknownDirective, line_no, head.column, "'" + std::string(head.text) + "'");
    const std::string_view directive = head.text.substr(0, head.text.size() - 1);
    const std::vector<detail::Token> args(tokens.begin() + 1, tokens.end());

    auto once = [&](std::optional<std::size_t>& seen) {
      if (seen)
        throw ParseError(K::DuplicateDirective, line_no, head.column,
                         "'" + std::string(directive) + "' already given on line " + std::to_string(*seen));
      seen = line_no;
    };

    if (directive == "alphabet") {
      once(alphabet_line);
      if (args.empty()) throw ParseError(K::Syntax, line_no, head.column, "empty alphabet");
      for (const auto& t : args) {
        if (std::find(doc.alphabet.begin(), doc.alphabet.end(), t.text) != doc.alphabet.end())
          throw ParseError(K::DuplicateLetter, line_no, t.column, "'" + std::string(t.text) + "'");
        doc.alphabet.emplace_back(t.text);
      }
      doc.rules.assign(doc.alphabet.size(), {});
      rule_line.assign(doc.alphabet.size(), std::nullopt);
    } else if (directive == "seed") {
      need_alphabet(head.column);
      once(seed_line);
      if (args.size() != 1) throw ParseError(K::Syntax, line_no, head.column, "expected exactly one seed letter");
      doc.seed = doc.alphabet[letter_index(args[0])];
    } else if (directive == "coding") {
      need_alphabet(head.column);
      once(coding_line);
      std::vector<std::optional<std::string>> image(doc.alphabet.size());
      for (const auto& t : args) {
        const auto arrow = t.text.find("->");
        if (arrow == std::string_view::npos || arrow == 0 || arrow + 2 == t.text.size())
          throw ParseError(K::BadCoding, line_no, t.column, "expected L->T, got '" + std::string(t.text) + "'");
        const std::size_t a = letter_index({t.text.substr(0, arrow), t.column});
        if (image[a]) throw ParseError(K::BadCoding, line_no, t.column, "letter '" + doc.alphabet[a] + "' coded twice");
        image[a] = std::string(t.text.substr(arrow + 2));
      }
      for (std::size_t a = 0; a < image.size(); ++a) {
        if (!image[a]) throw ParseError(K::BadCoding, line_no, head.column, "letter '" + doc.alphabet[a] + "' is not coded");
        doc.coding.emplace_back(doc.alphabet[a], *image[a]);
      }
    } else if (directive == "values") {
      need_alphabet(head.column);
      once(values_line);
      for (const auto& t : args) {
        const auto eq = t.text.find('=');
        if (eq == std::string_view::npos) throw ParseError(K::BadValue, line_no, t.column, "expected L=int");
        const std::size_t a = letter_index({t.text.substr(0, eq), t.column});
        const auto v = detail::parse_int(t.text.substr(eq + 1));
        if (!v) throw ParseError(K::BadValue, line_no, t.column, "'" + std::string(t.text.substr(eq + 1)) + "' is not an integer");
        doc.values.emplace_back(doc.alphabet[a], *v);
      }
    } else if (directive == "patch") {
      if (args.empty()) throw ParseError(K::Syntax, line_no, head.column, "patch needs at least one token");
      PipelineStep step;
      for (const auto& t : args) step.tokens.emplace_back(t.text);
      doc.pipeline.push_back(std::move(step));
    } else if (directive == "shift") {
      const auto v = args.size() == 1 ? detail::parse_int(args[0].text) : std::nullopt;
      if (!v || *v < 0) throw ParseError(K::Syntax, line_no, head.column, "shift needs one non-negative integer");
      doc.pipeline.push_back({PipelineStep::Kind::Shift, {}, static_cast<std::size_t>(*v)});
    } else {
      throw ParseError(K::UnknownDirective, line_no, head.column, "'" + std::string(directive) + "'");
    }
  }

  if (!alphabet_line) throw ParseError(K::MissingAlphabet, line_no, 1, "no 'alphabet:' line");
  for (std::size_t a = 0; a < doc.alphabet.size(); ++a)
    if (!rule_line[a]) throw ParseError(K::MissingRule, line_no, 1, "letter '" + doc.alphabet[a] + "' has no rule");
  if (!seed_line) throw ParseError(K::MissingSeed, line_no, 1, "no 'seed:' line");
  return doc;
}

// Canonical text form.
inline std::string print_spec(const SpecDocument& doc) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& l : doc.alphabet) out << ' ' << l;
  out << '\n';
  for (std::size_t a = 0; a < doc.alphabet.size(); ++a) {
    out << "rule " << doc.alphabet[a] << " ->";
    for (const auto& t : doc.rules[a]) out << ' ' << t;
    out << '\n';
  }
  out << "seed: " << doc.seed << '\n';
  if (!doc.coding.empty()) {
    out << "coding:";
    for (const auto& [from, to] : doc.coding) out << ' ' << from << "->" << to;
    out << '\n';
  }
  if (!doc.values.empty()) {
    out << "values:";
    for (const auto& [l, v] : doc.values) out << ' ' << l << '=' << v;
    out << '\n';
  }
  for (const auto& step : doc.pipeline) {
    if (step.kind == PipelineStep::Kind::Patch) {
      out << "patch:";
      for (const auto& t : step.tokens) out << ' ' << t;
      out << '\n';
    } else {
      out << "shift: " << step.amount << '\n';
    }
  }
  return out.str();
}

inline Morphism to_morphism(const SpecDocument& doc) {
  Alphabet alphabet(doc.alphabet);
  std::vector<Word> images;
  for (const auto& rhs : doc.rules) images.push_back(make_word(alphabet, rhs));
  return Morphism(std::move(alphabet), std::move(images));
}

inline std::optional<Coding> to_coding(const SpecDocument& doc) {
  if (doc.coding.empty()) return std::nullopt;
  std::vector<std::string> target;
  for (const auto& [from, to] : doc.coding)
    if (std::find(target.begin(), target.end(), to) == target.end()) target.push_back(to);
  Alphabet source(doc.alphabet), target_alphabet(target);
  std::vector<Letter> map(source.size());
  for (const auto& [from, to] : doc.coding) map[source.id(from)] = target_alphabet.id(to);
  return Coding(std::move(source), std::move(target_alphabet), std::move(map));
}

// Value map indexed by the letters of `alphabet` (by token); letters without
// a declared value fall back to their numeric token, if any.
inline std::vector<std::int64_t> to_values(const SpecDocument& doc, const Alphabet& alphabet) {
  std::vector<std::int64_t> values(alphabet.size());
  for (Letter a = 0; a < alphabet.size(); ++a) {
    const auto& tok = alphabet.name(a);
    auto it = std::find_if(doc.values.begin(), doc.values.end(), [&](const auto& kv) { return kv.first == tok; });
    if (it != doc.values.end()) {
      values[a] = it->second;
    } else if (auto v = detail::parse_int(tok)) {
      values[a] = *v;
    } else {
      throw InvalidArgument("no value for letter '" + tok + "'");
    }
  }
  return values;
}

inline WordSpecPtr to_word_spec(const SpecDocument& doc) {
  Morphism m = to_morphism(doc);
  const Letter seed = m.alphabet().id(doc.seed);
  WordSpecPtr spec = make_spec(MorphicFixedPoint{std::move(m), seed, to_coding(doc)});
  for (const auto& step : doc.pipeline) {
    if (step.kind == PipelineStep::Kind::Patch)
      spec = make_spec(PrefixPatch{spec, step.tokens});
    else
      spec = make_spec(Shift{spec, step.amount});
  }
  return spec;
}

// Inverse of to_word_spec for constructions built from a morphic fixed point
// and patch/shift steps; nullopt for any other construction.
inline std::optional<SpecDocument> from_word_spec(const WordSpec& spec) {
  if (const auto* fp = std::get_if<MorphicFixedPoint>(&spec.node)) {
    SpecDocument doc;
    const Alphabet& alphabet = fp->morphism.alphabet();
    doc.alphabet = alphabet.letters();
    for (Letter a = 0; a < alphabet.size(); ++a) {
      std::vector<std::string> rhs;
      for (Letter b : fp->morphism.image(a)) rhs.push_back(alphabet.name(b));
      doc.rules.push_back(std::move(rhs));
    }
    doc.seed = alphabet.name(fp->seed);
    if (fp->coding)
      for (Letter a = 0; a < alphabet.size(); ++a)
        doc.coding.emplace_back(alphabet.name(a), fp->coding->target().name((*fp->coding)(a)));
    return doc;
  }
  if (const auto* patch = std::get_if<PrefixPatch>(&spec.node)) {
    auto doc = from_word_spec(*patch->base);
    if (doc) doc->pipeline.push_back({PipelineStep::Kind::Patch, patch->replacement, 0});
    return doc;
  }
  if (const auto* shift = std::get_if<Shift>(&spec.node)) {
    auto doc = from_word_spec(*shift->base);
    if (doc) doc->pipeline.push_back({PipelineStep::Kind::Shift, {}, shift->k});
    return doc;
  }
  return std::nullopt;
}

}  // namespace morphic::dsl
