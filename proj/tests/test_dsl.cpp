#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "morphic/dsl.hpp"

using namespace morphic;
using dsl::ParseErrorKind;

namespace {

constexpr std::string_view kFibonacci = R"(# Fibonacci word
alphabet: 0 1
rule 0 -> 0 1
rule 1 -> 0
seed: 0
)";

struct Failure {
  ParseErrorKind kind;
  std::size_t line, column;
};

Failure failure_of(std::string_view text) {
  try {
    (void)dsl::parse_spec(text);
  } catch (const dsl::ParseError& e) {
    return {e.kind(), e.line(), e.column()};
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return {ParseErrorKind::Syntax, 0, 0};
}

void expect_failure(std::string_view text, ParseErrorKind kind, std::size_t line, std::size_t column) {
  const auto f = failure_of(text);
  EXPECT_EQ(f.kind, kind) << text;
  EXPECT_EQ(f.line, line) << text;
  EXPECT_EQ(f.column, column) << text;
}

dsl::SpecDocument random_document(std::mt19937& rng) {
  static const std::vector<std::string> pool{"0", "1", "2", "a", "b", "c0", "e1", "x_y", "10"};
  std::uniform_int_distribution<std::size_t> count(1, 4), len(0, 3), coin(0, 1);
  std::vector<std::string> letters = pool;
  std::shuffle(letters.begin(), letters.end(), rng);
  letters.resize(count(rng));
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);

  dsl::SpecDocument doc;
  doc.alphabet = letters;
  for (std::size_t a = 0; a < letters.size(); ++a) {
    std::vector<std::string> rhs(len(rng));
    for (auto& t : rhs) t = letters[pick(rng)];
    doc.rules.push_back(rhs);
  }
  doc.seed = letters[pick(rng)];
  if (coin(rng))
    for (const auto& l : letters) doc.coding.emplace_back(l, coin(rng) ? "A" : "B");
  if (coin(rng))
    for (const auto& l : letters) doc.values.emplace_back(l, static_cast<std::int64_t>(pick(rng)) - 1);
  if (coin(rng)) doc.pipeline.push_back({dsl::PipelineStep::Kind::Patch, {"P", letters.front()}, 0});
  if (coin(rng)) doc.pipeline.push_back({dsl::PipelineStep::Kind::Shift, {}, len(rng)});
  return doc;
}

}  // namespace

TEST(ParseSpec, Fibonacci) {
  const auto doc = dsl::parse_spec(kFibonacci);
  EXPECT_EQ(doc.alphabet, (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(doc.seed, "0");
  EXPECT_EQ(materialize(*dsl::to_word_spec(doc), 8).str(), "01001010");
}

TEST(ParseSpec, CommentsBlankLinesAndRuleOrder) {
  const auto doc = dsl::parse_spec(
      "\n  alphabet: a b   # two letters\n\nrule b -> a\n\trule a -> a b\nseed: a\ncoding: a->x b->y\n");
  EXPECT_EQ(doc.rules, (std::vector<std::vector<std::string>>{{"a", "b"}, {"a"}}));
  EXPECT_EQ(materialize(*dsl::to_word_spec(doc), 5).str(), "xyxxy");
}

TEST(ParseSpec, MultiCharLettersAndEmptyImages) {
  const auto doc = dsl::parse_spec("alphabet: c0 e0 z\nrule c0 -> c0 e0 z\nrule e0 -> e0\nrule z ->\nseed: c0\n");
  EXPECT_TRUE(doc.rules[2].empty());
  EXPECT_EQ(materialize(*dsl::to_word_spec(doc), 4).str(), "c0 e0 z e0");
}

TEST(ParseSpec, ErrorsCarryKindLineAndColumn) {
  expect_failure("alphabet: 0 1\nrule 0 -> 0 2\n", ParseErrorKind::UndeclaredLetter, 2, 13);
  expect_failure("rule 0 -> 0\n", ParseErrorKind::MissingAlphabet, 1, 1);
  expect_failure("alphabet: 0 1\nrule 0 -> 1\n rule 0 -> 0\n", ParseErrorKind::DuplicateRule, 3, 7);
  expect_failure("alphabet: 0 1\nrule 0 -> 1\nrule 1 -> 0\n", ParseErrorKind::MissingSeed, 4, 1);
  expect_failure("alphabet: 0 1\nrule 0 -> 1\nseed: 0\n", ParseErrorKind::MissingRule, 4, 1);
  expect_failure("alphabet: 0 0\n", ParseErrorKind::DuplicateLetter, 1, 13);
  expect_failure("alphabet: 0\nalphabet: 1\n", ParseErrorKind::DuplicateDirective, 2, 1);
  expect_failure("alphabet: 0\nseeds: 0\n", ParseErrorKind::UnknownDirective, 2, 1);
  expect_failure("alphabet: 0\nbogus\n", ParseErrorKind::UnknownDirective, 2, 1);
  expect_failure("alphabet: 0\nrule 0 0\n", ParseErrorKind::Syntax, 2, 1);
  expect_failure("alphabet: 0 1\nrule 0 -> 0\nrule 1 -> 1\nseed: 0\ncoding: 0->a\n", ParseErrorKind::BadCoding, 5,
                 1);
  expect_failure("alphabet: 0 1\ncoding: 0->a 0->b\n", ParseErrorKind::BadCoding, 2, 14);
  expect_failure("alphabet: 0 1\ncoding: 0a\n", ParseErrorKind::BadCoding, 2, 9);
  expect_failure("alphabet: 0\nvalues: 0=x\n", ParseErrorKind::BadValue, 2, 9);
  expect_failure("alphabet: 0\nshift: -1\n", ParseErrorKind::Syntax, 2, 1);
}

TEST(ParseSpec, MessageNamesLocationAndKind) {
  try {
    (void)dsl::parse_spec("alphabet: 0 1\nrule 0 -> 0 2\n");
    FAIL();
  } catch (const dsl::ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("2:13: undeclared letter:", 0), 0U) << e.what();
  }
}

TEST(PrintSpec, CanonicalForm) {
  EXPECT_EQ(dsl::print_spec(dsl::parse_spec(kFibonacci)), "alphabet: 0 1\nrule 0 -> 0 1\nrule 1 -> 0\nseed: 0\n");
}

TEST(PrintSpec, RoundTripsRandomDocuments) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto doc = random_document(rng);
    const auto text = dsl::print_spec(doc);
    ASSERT_EQ(dsl::parse_spec(text), doc) << text;
    ASSERT_EQ(dsl::print_spec(dsl::parse_spec(text)), text);
  }
}

TEST(WordSpecBridge, RoundTripsThroughTheConstruction) {
  const auto doc = dsl::parse_spec(
      "alphabet: a b c d\nrule a -> a b\nrule b -> a c\nrule c -> d b\nrule d -> d c\nseed: a\n"
      "coding: a->0 b->0 c->1 d->1\npatch: 1\nshift: 2\n");
  const auto spec = dsl::to_word_spec(doc);
  const auto back = dsl::from_word_spec(*spec);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, doc);
  // Rudin-Shapiro 0001001000011101 patched to 1001..., then shifted by two.
  EXPECT_EQ(materialize(*spec, 8).str(), "01001000");
  EXPECT_FALSE(dsl::from_word_spec(*make_spec(BaseConcat{2})));
}

TEST(WordSpecBridge, ValuesFallBackToNumericTokens) {
  const auto doc = dsl::parse_spec("alphabet: 0 x\nrule 0 -> 0 x\nrule x -> 0\nseed: 0\nvalues: x=-4\n");
  EXPECT_EQ(dsl::to_values(doc, Alphabet({"x", "0"})), (std::vector<std::int64_t>{-4, 0}));
  const auto bare = dsl::parse_spec("alphabet: 0 x\nrule 0 -> 0 x\nrule x -> 0\nseed: 0\n");
  EXPECT_THROW(dsl::to_values(bare, Alphabet({"0", "x"})), InvalidArgument);
}
