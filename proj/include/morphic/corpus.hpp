#pragma once

// Built-in constructions for the named words and one example word per class
// (a)-(t), each with its classification evidence and executable checks.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "morphic/analyze.hpp"
#include "morphic/core.hpp"
#include "morphic/dsl.hpp"
#include "morphic/generate.hpp"
#include "morphic/taxonomy.hpp"
#include "morphic/words.hpp"
#include "morphic/wordspec.hpp"

namespace morphic::corpus {

inline constexpr std::size_t kDefaultBudget = 10'000'000;

// Caps every prefix length an assertion asks for.
struct Scale {
  std::size_t budget = kDefaultBudget;
  std::size_t operator()(std::size_t wanted) const { return std::min(wanted, budget); }
};

struct CheckResult {
  bool passed = false;
  std::string detail;
};

struct Assertion {
  std::string name;
  std::function<CheckResult(const Scale&)> run;
};

// A second, independent route to the same word.
struct Construction {
  std::string description;
  std::function<Sequence(std::size_t)> generate;
};

struct Agreement {
  Construction first;
  Construction second;
  std::size_t length = 0;
};

struct CorpusEntry {
  std::string key;
  std::optional<char> label;
  std::string symbol;
  std::string title;
  WordSpecPtr spec;
  taxonomy::PropertyAssignment evidence;
  std::vector<Agreement> agreements;
  std::vector<Assertion> assertions;
};

struct AssertionOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyReport {
  std::string key;
  std::vector<AssertionOutcome> outcomes;

  bool passed() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; });
  }
};

// ---------------------------------------------------------------------------
// Named morphisms

namespace words {

inline Morphism fibonacci() { return make_morphism({{"0", "01"}, {"1", "0"}}); }
inline Morphism thue_morse() { return make_morphism({{"0", "01"}, {"1", "10"}}); }
inline Morphism gamma() { return make_morphism({{"0", "03"}, {"1", "43"}, {"3", "1"}, {"4", "01"}}); }
// Squarefree ternary morphism 2->210, 1->20, 0->1.
inline Morphism ternary() { return make_morphism({{"2", "210"}, {"1", "20"}, {"0", "1"}}); }
inline Morphism rudin_shapiro() { return make_morphism({{"a", "ab"}, {"b", "ac"}, {"c", "db"}, {"d", "dc"}}); }
inline Morphism rote() {
  return make_morphism({{"a", "abcab"}, {"b", "cda"}, {"c", "cdacd"}, {"d", "abc"}});
}
inline Morphism chacon() { return make_morphism({{"0", "0012"}, {"1", "12"}, {"2", "012"}}); }
inline Morphism chacon_binary() { return make_morphism({{"0", "0010"}, {"1", "1"}}); }

inline Morphism fibonacci_positions() {
  Alphabet alphabet({"c0", "e0", "c1", "e1", "c2"});
  auto w = [&](std::vector<std::string> t) { return make_word(alphabet, t); };
  return Morphism(alphabet, {w({"c0", "e0"}), w({"c1"}), w({"c1", "e1"}), w({"c2"}), w({"c2", "e1"})});
}

inline Coding coding(const Morphism& m, std::string_view from, std::string_view to) {
  return Coding::of_chars(m.alphabet(), from, to);
}

inline WordSpecPtr fibonacci_word() { return fixed_point_spec(fibonacci(), "0"); }
inline WordSpecPtr thue_morse_word() { return fixed_point_spec(thue_morse(), "0"); }
inline WordSpecPtr ternary_word() { return fixed_point_spec(ternary(), "2"); }

}  // namespace words

// ---------------------------------------------------------------------------
// Assertion helpers

namespace detail {

inline CheckResult pass(std::string detail = {}) { return {true, std::move(detail)}; }
inline CheckResult fail(std::string detail) { return {false, std::move(detail)}; }
inline CheckResult expect(bool ok, std::string detail) { return {ok, std::move(detail)}; }

inline Construction from_spec(std::string description, WordSpecPtr spec) {
  return {std::move(description), [spec](std::size_t n) { return materialize(*spec, n, std::max(n, kDefaultPrefixBudget)); }};
}

inline Sequence take(const WordSpecPtr& spec, std::size_t n) {
  return materialize(*spec, n, std::max(n, kDefaultPrefixBudget));
}

inline Letter letter(const Sequence& s, std::string_view token) {
  auto l = s.letter(token);
  if (!l) throw InvalidArgument("letter '" + std::string(token) + "' does not occur in the word");
  return *l;
}

inline std::size_t count_token(const Sequence& s, std::string_view token) {
  auto l = s.letter(token);
  if (!l) return 0;
  return static_cast<std::size_t>(std::count(s.word.begin(), s.word.end(), *l));
}

inline CheckResult check_prefix(const WordSpecPtr& spec, std::string_view expected) {
  const auto s = take(spec, expected.size()).str();
  return expect(s == expected, "prefix " + s + (s == expected ? "" : ", expected " + std::string(expected)));
}

inline Assertion prefix_assertion(WordSpecPtr spec, std::string expected) {
  return {"prefix equals " + expected, [spec, expected](const Scale&) { return check_prefix(spec, expected); }};
}

inline Assertion agreement_assertion(const Agreement& a) {
  return {a.first.description + " equals " + a.second.description + " on a prefix of " + std::to_string(a.length),
          [a](const Scale& scale) {
            const std::size_t n = scale(a.length);
            const Sequence x = a.first.generate(n);
            const Sequence y = a.second.generate(n);
            if (x.size() != n || y.size() != n) return fail("a construction produced a short prefix");
            if (auto d = first_difference(x, y))
              return fail("first difference at index " + std::to_string(*d) + ": " + x.token(*d) + " vs " +
                          y.token(*d));
            return pass("checked " + std::to_string(n) + " symbols");
          }};
}

inline std::string join_positions(const std::vector<std::size_t>& v, std::size_t limit = 8) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? "," : "") + std::to_string(v[i]);
  if (v.size() > limit) s += ",...";
  return s;
}

inline Assertion primitivity_assertion(std::string what, Morphism m, std::optional<std::size_t> exact,
                                       std::optional<std::size_t> at_most = std::nullopt) {
  std::string name = "primitivity exponent of " + what;
  if (exact) name += " is " + std::to_string(*exact);
  else if (at_most) name += " is at most " + std::to_string(*at_most);
  else name += " exists";
  return {name, [m, exact, at_most](const Scale&) {
            const auto e = primitivity(m);
            if (!e) return fail("morphism is not primitive");
            bool ok = true;
            if (exact) ok = *e == *exact;
            if (at_most) ok = ok && *e <= *at_most;
            return expect(ok, "exponent " + std::to_string(*e));
          }};
}

inline Assertion single_occurrence(WordSpecPtr spec, std::string factor, std::size_t length) {
  return {"factor " + factor + " occurs exactly once in a prefix of " + std::to_string(length),
          [spec, factor, length](const Scale& scale) {
            const auto s = take(spec, scale(length));
            std::vector<std::string> tokens;
            for (char c : factor) tokens.emplace_back(1, c);
            for (const auto& t : tokens)
              if (!s.alphabet.contains(t)) return fail("letter " + t + " never occurs");
            const auto r = gap_report(s.word, make_word(s.alphabet, tokens));
            return expect(r.positions.size() == 1,
                          std::to_string(r.positions.size()) + " occurrence(s) at " + join_positions(r.positions));
          }};
}

inline Assertion recurrence_assertion(WordSpecPtr spec, std::size_t window, std::size_t length, std::size_t max_len) {
  return {"every factor of length <= " + std::to_string(max_len) + " in the first " + std::to_string(window) +
              " symbols occurs again within " + std::to_string(length),
          [=](const Scale& scale) {
            const std::size_t n = scale(length);
            const std::size_t win = std::min(window, n / 10);
            const auto s = take(spec, n);
            const auto missing = non_recurring_factors(s.word, win, max_len);
            if (!missing.empty()) return fail("factor " + render(s.alphabet, missing.front()) + " does not recur");
            return pass("window " + std::to_string(win) + ", scanned " + std::to_string(n));
          }};
}

// Maximal runs of `token` strictly delimited on both sides (drops a run that
// touches either end of the prefix).
inline std::vector<Run> interior_runs(const Sequence& s, std::string_view token) {
  auto runs = run_statistics(s.word, letter(s, token));
  std::vector<Run> out;
  for (const auto& r : runs)
    if (r.start > 0 && r.start + r.length < s.size()) out.push_back(r);
  return out;
}

inline std::uint64_t ceil_log2(std::uint64_t n) {
  std::uint64_t m = 0;
  while ((std::uint64_t{1} << m) < n) ++m;
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog

namespace detail {

using P = taxonomy::Property;

inline CorpusEntry entry_a() {
  CorpusEntry e{"a", 'a', "a", "characteristic word of the factorials",
                make_spec(Characteristic{IntegerSet::Factorials}),
                {{P::P2, false}, {P::P10, false}}, {}, {}};
  e.assertions.push_back(prefix_assertion(e.spec, "01100010000000000000000010"));
  e.assertions.push_back(single_occurrence(e.spec, "11", 1'000'000));
  e.assertions.push_back({"a prefix of length n!+1 holds n ones, n <= 9", [spec = e.spec](const Scale& scale) {
                            std::vector<std::size_t> checkpoints;
                            std::size_t fact = 1;
                            for (std::size_t n = 1; n <= 9; ++n) {
                              fact *= n;
                              if (fact + 1 > scale.budget) break;
                              checkpoints.push_back(fact + 1);
                            }
                            const auto s = take(spec, checkpoints.back());
                            const auto counts = occurrence_growth(s.word, letter(s, "1"), checkpoints);
                            for (std::size_t i = 0; i < counts.size(); ++i)
                              if (counts[i] != i + 1)
                                return fail("n=" + std::to_string(i + 1) + ": " + std::to_string(counts[i]) + " ones");
                            return pass("checked n <= " + std::to_string(counts.size()));
                          }});
  return e;
}

inline CorpusEntry entry_b() {
  CorpusEntry e{"b", 'b', "b", "concatenated binary expansions of 1, 2, 3, ...", make_spec(BaseConcat{2}),
                {{P::P10, true}, {P::P2, false}, {P::P9, false}}, {}, {}};
  e.assertions.push_back(prefix_assertion(e.spec, "11011100101110111"));
  e.assertions.push_back({"factor complexity is 2^n for n <= 14", [spec = e.spec](const Scale& scale) {
                            const std::size_t length = scale(1'000'000);
                            // Every n-bit string occurs once all (n+1)-bit numbers are written.
                            auto needed = [](std::size_t bits) {
                              std::size_t total = 0;
                              for (std::size_t j = 1; j <= bits; ++j) total += j << (j - 1);
                              return total;
                            };
                            std::size_t n_max = 0;
                            while (n_max < 14 && needed(n_max + 2) <= length) ++n_max;
                            if (n_max == 0) return fail("budget too small");
                            const auto s = take(spec, length);
                            const auto p = factor_complexity(s.word, n_max);
                            for (std::size_t n = 1; n <= n_max; ++n)
                              if (p(n) != (std::size_t{1} << n))
                                return fail("p(" + std::to_string(n) + ") = " + std::to_string(p(n)));
                            return pass("checked n <= " + std::to_string(n_max) + " on " + std::to_string(length));
                          }});
  e.assertions.push_back({"0-runs keep growing with the prefix", [spec = e.spec](const Scale& scale) {
                            const std::size_t length = scale(1'000'000);
                            const auto s = take(spec, length);
                            // Numbers 1..M are written in full; 2^j <= M gives a run of j zeros.
                            std::size_t written = 0, m = 0;
                            for (std::uint64_t v = 1;; ++v) {
                              const std::size_t bits = 64 - static_cast<std::size_t>(__builtin_clzll(v));
                              if (written + bits > length) break;
                              written += bits;
                              m = v;
                            }
                            std::size_t j = 0;
                            while ((std::uint64_t{2} << j) <= m) ++j;
                            std::size_t longest = 0;
                            for (const auto& r : run_statistics(s.word, letter(s, "0"))) longest = std::max(longest, r.length);
                            return expect(longest >= j, "longest 0-run " + std::to_string(longest) + ", expected >= " +
                                                            std::to_string(j));
                          }});
  e.assertions.push_back(recurrence_assertion(e.spec, 10'000, 100'000, 12));
  return e;
}

inline Sequence pi_sturmian_reference(std::size_t n) {
  using Dec = boost::multiprecision::cpp_dec_float_100;
  const Dec pi = boost::math::constants::pi<Dec>();
  Sequence s{Alphabet({"3", "4"}), {}};
  Dec prev = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Dec next = boost::multiprecision::floor(Dec(i + 1) * pi);
    s.word.push_back(next - prev == 3 ? 0 : 1);
    prev = next;
  }
  return s;
}

inline CorpusEntry entry_c() {
  CorpusEntry e{"c", 'c', "s_pi", "Sturmian characteristic word with slope pi",
                make_spec(Sturmian{pi_constant(), QuadraticNumber{}}),
                {{P::P9, true}, {P::P2, false}}, {}, {}};
  e.assertions.push_back({"prefix matches an independent 100-digit floor evaluation", [spec = e.spec](const Scale& scale) {
                            const std::size_t n = scale(10'000);
                            const auto s = take(spec, n);
                            if (auto d = first_difference(s, pi_sturmian_reference(n)))
                              return fail("differs at index " + std::to_string(*d));
                            return pass("checked " + std::to_string(n) + " symbols");
                          }});
  e.assertions.push_back({"return windows of factors of length <= 12 stop growing", [spec = e.spec](const Scale& scale) {
                            const std::size_t n = scale(100'000);
                            const auto s = take(spec, n);
                            const auto half = uniform_recurrence_evidence(std::span<const Letter>(s.word).first(n / 2), 12);
                            const auto full = uniform_recurrence_evidence(s.word, 12);
                            return expect(full.worst_window <= half.worst_window,
                                          "worst window " + std::to_string(half.worst_window) + " at " +
                                              std::to_string(n / 2) + ", " + std::to_string(full.worst_window) +
                                              " at " + std::to_string(n));
                          }});
  return e;
}

inline CorpusEntry entry_d() {
  const auto m = make_morphism({{"a", "ab"}, {"b", "c"}, {"c", "cd"}, {"d", "c"}});
  CorpusEntry e{"d", 'd', "f'", "Fibonacci word with its first two symbols replaced by 2",
                make_spec(PrefixPatch{words::fibonacci_word(), {"2", "2"}}),
                {{P::P2, true}, {P::P1, false}, {P::P4, false}, {P::P6, false}, {P::P10, false}}, {}, {}};
  e.agreements.push_back({from_spec("patched f", e.spec),
                          from_spec("coded fixed point of a->ab, b->c, c->cd, d->c",
                                    fixed_point_spec(m, "a", words::coding(m, "abcd", "2201"))),
                          100'000});
  e.assertions.push_back(prefix_assertion(e.spec, "22001010"));
  e.assertions.push_back({"letter 2 occurs exactly twice", [spec = e.spec](const Scale& scale) {
                            const auto c = count_token(take(spec, scale(100'000)), "2");
                            return expect(c == 2, std::to_string(c) + " occurrences");
                          }});
  e.assertions.push_back({"frequency of 0 is within 1e-3 of the Fibonacci Perron frequency", [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(1'000'000));
                            const double emp = static_cast<double>(count_token(s, "0")) / static_cast<double>(s.size());
                            const double th = perron_frequencies(words::fibonacci())[0];
                            return expect(std::abs(emp - th) < 1e-3,
                                          "empirical " + std::to_string(emp) + ", Perron " + std::to_string(th));
                          }});
  return e;
}

inline CorpusEntry entry_e() {
  const auto m = make_morphism({{"a", "ababb"}, {"b", "bc"}, {"c", "c"}});
  CorpusEntry e{"e", 'e', "x", "coded fixed point of a->ababb, b->bc, c->c",
                fixed_point_spec(m, "a", words::coding(m, "abc", "011")),
                {{P::P2, true}, {P::P10, true}, {P::P1, false}, {P::P4, false}, {P::P6, false}, {P::P9, false}},
                {}, {}};
  e.agreements.push_back({from_spec("x", e.spec),
                          from_spec("product of 0 1^((v2(n)+1)^2)", make_spec(Product{ProductFormula::RulerSquares})),
                          100'000});
  e.assertions.push_back(prefix_assertion(e.spec, "0101111010111111111010111101"));
  e.assertions.push_back({"the n-th block of ones has length (v2(n)+1)^2", [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(100'000));
                            const auto runs = run_statistics(s.word, letter(s, "1"));
                            for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
                              const std::uint64_t v = two_adic_valuation(i + 1) + 1;
                              if (runs[i].length != v * v)
                                return fail("block " + std::to_string(i + 1) + " has length " +
                                            std::to_string(runs[i].length));
                            }
                            return pass(std::to_string(runs.size() - 1) + " complete blocks");
                          }});
  e.assertions.push_back({"lengths n with 0 1^n 0 a factor are exactly the squares reachable in the prefix",
                          [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(100'000));
                            std::set<std::size_t> seen;
                            const auto runs = interior_runs(s, "1");
                            for (const auto& r : runs) seen.insert(r.length);
                            // runs[i] is block i+1; block 2^j is the first with length (j+1)^2.
                            std::set<std::size_t> expected;
                            for (std::size_t j = 0; (std::size_t{1} << j) <= runs.size(); ++j)
                              expected.insert((j + 1) * (j + 1));
                            std::string got;
                            for (auto v : seen) got += (got.empty() ? "" : ",") + std::to_string(v);
                            return expect(seen == expected, "lengths {" + got + "}");
                          }});
  e.assertions.push_back({"complexity grows faster than linearly for n <= 40", [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(200'000));
                            const auto p = factor_complexity(s.word, 40);
                            for (std::size_t n = 1; n < 40; ++n)
                              if (p(n + 1) <= p(n)) return fail("p not increasing at " + std::to_string(n));
                            // p(n)/n must strictly increase on the tail of the range
                            // (a linear-complexity word would level off).
                            const double r20 = static_cast<double>(p(20)) / 20.0;
                            const double r40 = static_cast<double>(p(40)) / 40.0;
                            return expect(r40 > r20 && p(40) > 2 * 40 + 1,
                                          "p(20)=" + std::to_string(p(20)) + ", p(40)=" + std::to_string(p(40)));
                          }});
  return e;
}

inline CorpusEntry entry_f() {
  const auto h = make_morphism({{"a", "ac"}, {"c", "b"}, {"b", "ac"}});
  QuadraticNumber alpha{3, -1, 5, 2};  // (3 - sqrt5)/2
  QuadraticNumber rho{3, -1, 5, 1};    // 3 - sqrt5
  CorpusEntry e{"f", 'f', "s_(alpha,rho)", "Sturmian word with slope (3-sqrt5)/2 and intercept 3-sqrt5",
                make_spec(Sturmian{alpha, rho}),
                {{P::P6, true}, {P::P1, false}, {P::P4, false}}, {}, {}};
  e.agreements.push_back({from_spec("Sturmian word", e.spec),
                          from_spec("coded fixed point of a->ac, c->b, b->ac",
                                    fixed_point_spec(h, "a", Coding::of_chars(h.alphabet(), "abc", "100"))),
                          10'000});
  e.agreements.push_back({from_spec("Sturmian word", e.spec),
                          from_spec("f shifted by one", make_spec(Shift{words::fibonacci_word(), 1})), 10'000});
  e.assertions.push_back(primitivity_assertion("a->ac, c->b, b->ac", h, std::nullopt, 3));
  return e;
}

inline CorpusEntry entry_g() {
  const auto h = make_morphism({{"a", "ab"}, {"b", "ca"}, {"c", "cd"}, {"d", "ac"}});
  const auto six = make_morphism({{"0", "01"}, {"1", "23"}, {"2", "24"}, {"3", "35"}, {"4", "32"}, {"5", "23"}});
  CorpusEntry e{"g", 'g', "w", "squarefree ternary word with its first 1 replaced by 2",
                make_spec(PrefixPatch{words::ternary_word(), {"2", "2"}}),
                {{P::P4, true}, {P::P1, false}, {P::P6, false}, {P::P10, false}}, {}, {}};
  e.agreements.push_back({from_spec("coded fixed point of a->ab, b->ca, c->cd, d->ac",
                                    fixed_point_spec(h, "a", words::coding(h, "abcd", "2101"))),
                          from_spec("fixed point of 2->210, 1->20, 0->1", words::ternary_word()), 100'000});
  e.agreements.push_back({from_spec("patched word", e.spec),
                          from_spec("coded fixed point of the six-letter morphism",
                                    fixed_point_spec(six, "0", words::coding(six, "012345", "220211"))),
                          100'000});
  e.assertions.push_back(prefix_assertion(e.spec, "220201210120"));
  e.assertions.push_back(single_occurrence(e.spec, "22", 100'000));
  return e;
}

inline CorpusEntry entry_h() {
  const auto v = make_morphism({{"a", "abba"}, {"b", "bccb"}, {"c", "cbbc"}});
  const auto y = make_morphism({{"a", "aba"}, {"b", "ccc"}, {"c", "ccc"}});
  CorpusEntry e{"h", 'h', "x", "coded fixed point of a->abba, b->bccb, c->cbbc",
                fixed_point_spec(v, "a", words::coding(v, "abc", "001")),
                {{P::P4, true}, {P::P10, true}, {P::P1, false}, {P::P6, false}}, {}, {}};
  e.agreements.push_back({from_spec("v coded by abc->010", fixed_point_spec(v, "a", words::coding(v, "abc", "010"))),
                          from_spec("Thue-Morse word", words::thue_morse_word()), 1U << 14});
  const auto ruler_block = [](unsigned i) {
    std::vector<std::string> block{"0", "0", "0"};
    std::size_t ones = 1;
    for (unsigned j = 0; j <= i; ++j) ones *= 3;
    block.insert(block.end(), ones, "1");
    return block;
  };
  e.agreements.push_back({from_spec("y (coded fixed point of a->aba, b->ccc, c->ccc)",
                                    fixed_point_spec(y, "a", words::coding(y, "abc", "001"))),
                          from_spec("ruler image", make_spec(RulerImage{"i -> 000 1^(3^(i+1))", ruler_block})),
                          100'000});
  e.assertions.push_back(prefix_assertion(e.spec, "0000011001100000011010011001011001101001100101100000"));
  e.assertions.push_back({"4-aligned blocks lie in {0000, 0110, 1001}", [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(100'000) / 4 * 4);
                            const std::string text = s.str();
                            for (std::size_t i = 0; i + 4 <= text.size(); i += 4) {
                              const auto b = text.substr(i, 4);
                              if (b != "0000" && b != "0110" && b != "1001")
                                return fail("block " + b + " at " + std::to_string(i));
                            }
                            return pass(std::to_string(text.size() / 4) + " blocks");
                          }});
  e.assertions.push_back({"ruler sequence 0102... is squarefree", [](const Scale& scale) {
                            const std::size_t n = scale(10'000);
                            const auto s = ruler_image([](unsigned i) { return std::vector<std::string>{std::to_string(i)}; }, n);
                            const auto squares = find_k_powers(s.word, 2, n / 2);
                            return expect(squares.empty(), std::to_string(squares.size()) + " squares in " + std::to_string(n));
                          }});
  return e;
}

inline CorpusEntry entry_i() {
  const auto m = words::rudin_shapiro();
  CorpusEntry e{"i", 'i', "r", "Golay-Rudin-Shapiro sequence",
                fixed_point_spec(m, "a", words::coding(m, "abcd", "0011")),
                {{P::P8, true}, {P::P1, false}}, {}, {}};
  e.assertions.push_back(prefix_assertion(e.spec, "0001001000011101"));
  e.assertions.push_back({"r[n] is the parity of overlapping 11 in binary(n), n < 2^16", [spec = e.spec](const Scale& scale) {
                            const std::size_t n = scale(std::size_t{1} << 16);
                            const auto s = take(spec, n);
                            for (std::size_t i = 0; i < n; ++i) {
                              const unsigned parity = static_cast<unsigned>(__builtin_popcountll(i & (i >> 1))) & 1U;
                              if (s.token(i) != std::to_string(parity)) return fail("mismatch at n=" + std::to_string(i));
                            }
                            return pass("checked " + std::to_string(n) + " terms");
                          }});
  e.assertions.push_back({"cubes with period <= 20 are exactly 000 and 111", [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(100'000));
                            std::set<std::string> cubes;
                            for (const auto& hit : find_k_powers(s.word, 3, 20))
                              cubes.insert(render(s.alphabet, std::span<const Letter>(s.word).subspan(hit.position, 3 * hit.period)));
                            std::string got;
                            for (const auto& c : cubes) got += (got.empty() ? "" : ",") + c;
                            return expect(cubes == std::set<std::string>{"000", "111"}, "cubes {" + got + "}");
                          }});
  return e;
}

inline CorpusEntry entry_j() {
  const auto m = make_morphism({{"2", "21"}, {"1", "0"}, {"0", "01"}});
  CorpusEntry e{"j", 'j', "u", "Fibonacci word with its first symbol replaced by 2",
                make_spec(PrefixPatch{words::fibonacci_word(), {"2"}}),
                {{P::P1, true}, {P::P4, false}, {P::P6, false}, {P::P10, false}}, {}, {}};
  e.agreements.push_back({from_spec("patched f", e.spec),
                          from_spec("fixed point of 2->21, 1->0, 0->01", fixed_point_spec(m, "2")), 100'000});
  e.assertions.push_back(prefix_assertion(e.spec, "21001010"));
  e.assertions.push_back(single_occurrence(e.spec, "2", 100'000));
  return e;
}

inline CorpusEntry entry_k() {
  const auto m = make_morphism({{"0", "010"}, {"1", "11"}});
  CorpusEntry e{"k", 'k', "h^w(0)", "fixed point of 0->010, 1->11", fixed_point_spec(m, "0"),
                {{P::P1, true}, {P::P10, true}, {P::P4, false}, {P::P6, false}, {P::P9, false}}, {}, {}};
  e.assertions.push_back(recurrence_assertion(e.spec, 10'000, 100'000, 10));
  e.assertions.push_back({"block 1^n first starts at 1-based (m+2)2^(m-1)+1, m = ceil(log2 n), 2 <= n <= 1024",
                          [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(20'000));
                            const auto runs = run_statistics(s.word, letter(s, "1"));
                            std::size_t checked = 0;
                            for (std::uint64_t n = 2; n <= 1024; ++n) {
                              const std::uint64_t m = ceil_log2(n);
                              const std::uint64_t one_based = (m + 2) * (std::uint64_t{1} << (m - 1)) + 1;
                              auto it = std::find_if(runs.begin(), runs.end(), [&](const Run& r) { return r.length >= n; });
                              if (it == runs.end() || it->start + n > s.size()) break;
                              if (it->start + 1 != one_based)
                                return fail("n=" + std::to_string(n) + ": 1-based " + std::to_string(it->start + 1) +
                                            ", formula " + std::to_string(one_based));
                              ++checked;
                            }
                            return expect(checked == 1023 || scale.budget < 20'000,
                                          "checked " + std::to_string(checked) + " values of n");
                          }});
  return e;
}

inline CorpusEntry entry_l() {
  const auto c = words::chacon();
  const auto delta = words::chacon_binary();
  CorpusEntry e{"l", 'l', "D", "Chacon word coded by 012->010", fixed_point_spec(delta, "0"),
                {{P::P1, true}, {P::P6, true}, {P::P4, false}, {P::P5, false}}, {}, {}};
  e.agreements.push_back({from_spec("Chacon word C coded by 012->010", fixed_point_spec(c, "0", words::coding(c, "012", "010"))),
                          from_spec("fixed point of 0->0010, 1->1", e.spec), 1'000'000});
  e.assertions.push_back(prefix_assertion(fixed_point_spec(c, "0"), "0012001212012"));
  e.assertions.push_back(prefix_assertion(e.spec, "0010001010010"));
  e.assertions.push_back(primitivity_assertion("the Chacon morphism", c, 2));
  e.assertions.push_back({"|delta^n(0)| = (3^(n+1)-1)/2 for n <= 12", [delta](const Scale&) {
                            for (std::size_t n = 0; n <= 12; ++n) {
                              const auto len = iterate(delta, {0}, n).size();
                              std::size_t p = 1;
                              for (std::size_t i = 0; i <= n; ++i) p *= 3;
                              if (len != (p - 1) / 2) return fail("n=" + std::to_string(n) + ": " + std::to_string(len));
                            }
                            return pass();
                          }});
  e.assertions.push_back({"factor complexity of C is 2n+1 for n <= 30", [c](const Scale& scale) {
                            const auto s = take(fixed_point_spec(c, "0"), scale(100'000));
                            const auto p = factor_complexity(s.word, 30);
                            for (std::size_t n = 1; n <= 30; ++n)
                              if (p(n) != 2 * n + 1) return fail("p(" + std::to_string(n) + ") = " + std::to_string(p(n)));
                            return pass();
                          }});
  e.assertions.push_back({"factor complexity of D is 2n-1 for 2 <= n <= 30", [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(100'000));
                            const auto p = factor_complexity(s.word, 30);
                            for (std::size_t n = 2; n <= 30; ++n)
                              if (p(n) != 2 * n - 1) return fail("p(" + std::to_string(n) + ") = " + std::to_string(p(n)));
                            return pass();
                          }});
  e.assertions.push_back({"D at x_n = [(20)^n]_3 is the n-th symbol of 0101 delta(0) 1 delta^2(0) 1 ..., n <= 7",
                          [spec = e.spec, delta](const Scale& scale) {
                            const auto digits = Alphabet::of_chars("012");
                            std::vector<std::size_t> xs;
                            for (std::size_t n = 0; n <= 7; ++n) {
                              Word numeral;
                              for (std::size_t i = 0; i < n; ++i) numeral.insert(numeral.end(), {2, 0});
                              const BigInt x = base_k_value(digits, numeral, 3);
                              BigInt closed = 1;
                              for (std::size_t i = 0; i < 2 * n + 1; ++i) closed *= 3;
                              closed = (closed - 3) / 4;
                              if (x != closed) return fail("x_" + std::to_string(n) + " disagrees with (3^(2n+1)-3)/4");
                              if (x + 1 > scale.budget) break;
                              xs.push_back(static_cast<std::size_t>(x));
                            }
                            // w = 0101 · delta(0) · 1 · delta^2(0) · 1 · ...
                            Word w = {0, 1, 0, 1};
                            for (std::size_t k = 1; w.size() < 16; ++k) {
                              const auto block = iterate(delta, {0}, k);
                              w.insert(w.end(), block.begin(), block.end());
                              w.push_back(1);
                            }
                            const auto s = take(spec, xs.back() + 1);
                            for (std::size_t n = 0; n < xs.size(); ++n)
                              if (s.word[xs[n]] != w[n])
                                return fail("n=" + std::to_string(n) + ", x_n=" + std::to_string(xs[n]));
                            return pass("checked n <= " + std::to_string(xs.size() - 1) + ", x_max=" +
                                        std::to_string(xs.back()));
                          }});
  e.assertions.push_back({"every square prefix uu with |uu| <= 10^4 has u = 0 or u = delta^n(0)",
                          [spec = e.spec, delta](const Scale& scale) {
                            const std::size_t n = scale(10'000);
                            const auto s = take(spec, n);
                            std::set<std::size_t> allowed{1};
                            for (std::size_t k = 1, len = 2; len <= n; ++k) {
                              len = iterate(delta, {0}, k).size();
                              allowed.insert(len);
                            }
                            std::vector<std::size_t> found;
                            for (std::size_t len = 1; 2 * len <= n; ++len) {
                              if (!std::equal(s.word.begin(), s.word.begin() + static_cast<std::ptrdiff_t>(len),
                                              s.word.begin() + static_cast<std::ptrdiff_t>(len)))
                                continue;
                              found.push_back(len);
                              // A prefix of D of length |delta^k(0)| is delta^k(0) itself.
                              if (!allowed.count(len)) return fail("square prefix with |u| = " + std::to_string(len));
                            }
                            return pass("|u| in {" + join_positions(found, 20) + "}");
                          }});
  return e;
}

inline CorpusEntry entry_m() {
  CorpusEntry e{"m", 'm', "f", "Fibonacci word", words::fibonacci_word(), {{P::P5, true}, {P::P4, false}}, {}, {}};
  e.assertions.push_back(primitivity_assertion("phi", words::fibonacci(), 2));
  e.assertions.push_back({"factor complexity is n+1 for n <= 30", [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(100'000));
                            const auto p = factor_complexity(s.word, 30);
                            for (std::size_t n = 1; n <= 30; ++n)
                              if (p(n) != n + 1) return fail("p(" + std::to_string(n) + ") = " + std::to_string(p(n)));
                            return pass();
                          }});
  e.assertions.push_back({"Perron frequency of 0 is (sqrt5-1)/2 within 1e-9", [](const Scale&) {
                            const double f0 = perron_frequencies(words::fibonacci())[0];
                            return expect(std::abs(f0 - (std::sqrt(5.0) - 1.0) / 2.0) < 1e-9, std::to_string(f0));
                          }});
  return e;
}

inline CorpusEntry entry_n() {
  const auto h = make_morphism({{"3", "32"}, {"2", "102012"}, {"1", "1012"}, {"0", "02"}});
  const auto delta = make_morphism({{"a", "ab"}, {"b", "cd"}, {"c", "bd"}, {"d", "eb"}, {"e", "db"}});
  const auto rho = words::coding(delta, "abcde", "32101");
  CorpusEntry e{"n", 'n', "w", "fixed point of 3->32, 2->102012, 1->1012, 0->02", fixed_point_spec(h, "3"),
                {{P::P1, true}, {P::P4, true}, {P::P3, false}, {P::P6, false}, {P::P10, false}}, {}, {}};
  e.agreements.push_back({from_spec("h^w(3)", e.spec),
                          from_spec("coded fixed point of the five-letter 2-uniform morphism",
                                    fixed_point_spec(delta, "a", rho)),
                          100'000});
  e.agreements.push_back({from_spec("h^w(3) shifted by one", make_spec(Shift{e.spec, 1})),
                          from_spec("fixed point of 2->210, 1->20, 0->1", words::ternary_word()), 100'000});
  e.assertions.push_back({"h^(n+1)(3) = 3 g^(2n)(2) g^(2n-2)(2) ... g^2(2) 2 for n <= 8", [h](const Scale&) {
                            const auto g = words::ternary();
                            const Letter three = h.alphabet().id("3");
                            for (std::size_t n = 0; n <= 8; ++n) {
                              const std::string lhs = render(h.alphabet(), iterate(h, {three}, n + 1));
                              std::string rhs = "3";
                              for (std::size_t k = n; k >= 1; --k)
                                rhs += render(g.alphabet(), iterate(g, {g.alphabet().id("2")}, 2 * k));
                              rhs += "2";
                              if (lhs != rhs) return fail("identity fails at n=" + std::to_string(n));
                            }
                            return pass();
                          }});
  e.assertions.push_back({"rho(delta^n(c)) starts 20 (odd n) or 10 (even n), and rho(delta^n(e)) starts 02 or 12, n <= 12",
                          [delta, rho](const Scale&) {
                            for (std::size_t n = 1; n <= 12; ++n) {
                              const auto c = render(rho.target(), rho.apply(iterate(delta, {delta.alphabet().id("c")}, n)));
                              const auto e = render(rho.target(), rho.apply(iterate(delta, {delta.alphabet().id("e")}, n)));
                              const bool odd = n % 2 == 1;
                              if (c.substr(0, 2) != (odd ? "20" : "10") || e.substr(0, 2) != (odd ? "02" : "12"))
                                return fail("n=" + std::to_string(n) + ": " + c.substr(0, 2) + " / " + e.substr(0, 2));
                            }
                            return pass();
                          }});
  e.assertions.push_back(single_occurrence(e.spec, "3", 100'000));
  return e;
}

inline CorpusEntry entry_o() {
  const auto f = make_morphism({{"a", "abcda"}, {"b", "bcdee"}, {"c", "eeeee"}, {"d", "eeeee"}, {"e", "eeeee"}});
  const auto g = words::coding(f, "abcde", "01123");
  const auto h = make_morphism({{"0", "01120"}, {"1", "1"}, {"2", "2333333333333"}, {"3", "33333"}});
  CorpusEntry e{"o", 'o', "q", "fixed point of 0->01120, 1->1, 2->2 3^12, 3->33333", fixed_point_spec(h, "0"),
                {{P::P1, true}, {P::P4, true}, {P::P10, true}, {P::P3, false}, {P::P6, false}}, {}, {}};
  e.agreements.push_back({from_spec("coded fixed point of a->abcda, b->bcdee, c,d,e->eeeee", fixed_point_spec(f, "a", g)),
                          from_spec("h^w(0)", e.spec), 100'000});
  e.assertions.push_back({"h(g(f(x))) = g(f(f(x))) for every letter x", [f, g, h](const Scale&) {
                            for (Letter x = 0; x < f.size(); ++x) {
                              const Word gf = g.apply(f.image(x));
                              // g's target alphabet lists 0,1,2,3 in order, as does h's.
                              const std::string lhs = render(h.alphabet(), apply(h, make_word(h.alphabet(), render(g.target(), gf))));
                              const std::string rhs = render(g.target(), g.apply(apply(f, f.image(x))));
                              if (lhs != rhs) return fail("differs on " + f.alphabet().name(x));
                            }
                            return pass();
                          }});
  e.assertions.push_back({"first runs of 3 have lengths 12 and 72 at positions 8 and 28", [spec = e.spec](const Scale&) {
                            const auto s = take(spec, 100);
                            const auto runs = run_statistics(s.word, letter(s, "3"));
                            const bool ok = runs.size() >= 2 && runs[0] == Run{8, 12} && runs[1] == Run{28, 72};
                            std::string got;
                            for (std::size_t i = 0; i < runs.size() && i < 2; ++i)
                              got += "(" + std::to_string(runs[i].start) + "," + std::to_string(runs[i].length) + ")";
                            return expect(ok, "runs " + got);
                          }});
  e.assertions.push_back(prefix_assertion(e.spec, "0112011233333333333301120112" + std::string(72, '3') + "0"));
  return e;
}

inline CorpusEntry entry_p() {
  const auto m = make_morphism({{"a", "acb"}, {"b", "bca"}, {"c", "c"}});
  const auto eta = make_morphism({{"0", "01"}, {"1", "23"}, {"2", "23"}, {"3", "01"}});
  CorpusEntry e{"p", 'p', "u", "fixed point of a->acb, b->bca, c->c", fixed_point_spec(m, "a"),
                {{P::P1, true}, {P::P8, true}, {P::P3, false}, {P::P5, false}}, {}, {}};
  const Construction image_of_t{"image of t under 0->ac, 1->bc", [](std::size_t n) {
                                  const auto t = take(words::thue_morse_word(), n / 2 + 1);
                                  Sequence s{Alphabet::of_chars("abc"), {}};
                                  for (Letter x : t.word) {
                                    s.word.push_back(x == 0 ? 0 : 1);
                                    s.word.push_back(2);
                                  }
                                  s.word.resize(n);
                                  return s;
                                }};
  e.agreements.push_back({image_of_t, from_spec("fixed point of a->acb, b->bca, c->c", e.spec), 100'000});
  e.agreements.push_back({image_of_t,
                          from_spec("coding 0123->acbc of eta^w(0)", fixed_point_spec(eta, "0", words::coding(eta, "0123", "acbc"))),
                          100'000});
  e.assertions.push_back(prefix_assertion(e.spec, "acbcbcacbcacacbc"));
  e.assertions.push_back(primitivity_assertion("eta", eta, 2));
  e.assertions.push_back({"every arithmetic progression of t with start < step <= 64 hits both letters",
                          [](const Scale&) {
                            const auto t = take(words::thue_morse_word(), 64 * 256);
                            for (std::size_t step = 1; step <= 64; ++step)
                              for (std::size_t start = 0; start < step; ++start) {
                                const auto sub = arithmetic_subsequence(t.word, start, step, 256);
                                const auto c = letter_counts(2, sub);
                                if (c[0] == 0 || c[1] == 0)
                                  return fail("constant progression start=" + std::to_string(start) + " step=" +
                                              std::to_string(step));
                              }
                            return pass();
                          }});
  return e;
}

inline CorpusEntry entry_q() {
  CorpusEntry e{"q", 'q', "T", "fixed point of 2->210, 1->20, 0->1", words::ternary_word(),
                {{P::P5, true}, {P::P8, true}, {P::P3, false}}, {}, {}};
  e.assertions.push_back(prefix_assertion(e.spec, "210201"));
  e.assertions.push_back({"squarefree with period <= 100 on a prefix of 10^5", [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(100'000));
                            const auto hits = find_k_powers(s.word, 2, 100);
                            return expect(hits.empty(), std::to_string(hits.size()) + " squares");
                          }});
  e.assertions.push_back(primitivity_assertion("2->210, 1->20, 0->1", words::ternary(), std::nullopt));
  return e;
}

inline CorpusEntry entry_r() {
  CorpusEntry e{"r", 'r', "a b c...", "fixed point of a->ab, b->bc, c->cc",
                fixed_point_spec(make_morphism({{"a", "ab"}, {"b", "bc"}, {"c", "cc"}}), "a"),
                {{P::P3, true}, {P::P6, false}, {P::P10, false}}, {}, {}};
  e.assertions.push_back(single_occurrence(e.spec, "a", 100'000));
  return e;
}

inline CorpusEntry entry_s() {
  CorpusEntry e{"s", 's', "s", "fixed point of 0->010, 1->111",
                fixed_point_spec(make_morphism({{"0", "010"}, {"1", "111"}}), "0"),
                {{P::P3, true}, {P::P10, true}, {P::P6, false}}, {}, {}};
  e.assertions.push_back(recurrence_assertion(e.spec, 10'000, 100'000, 12));
  e.assertions.push_back({"a run of 3^k ones exists whenever 2*3^k fits in the prefix", [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(100'000));
                            std::size_t longest = 0;
                            for (const auto& r : run_statistics(s.word, letter(s, "1"))) longest = std::max(longest, r.length);
                            std::size_t want = 1;
                            while (2 * want * 3 <= s.size()) want *= 3;
                            return expect(longest >= want, "longest run " + std::to_string(longest) + ", needed " +
                                                               std::to_string(want));
                          }});
  return e;
}

inline CorpusEntry entry_t() {
  const auto mu = words::thue_morse();
  CorpusEntry e{"t", 't', "t", "Thue-Morse word", words::thue_morse_word(), {{P::P7, true}}, {}, {}};
  e.assertions.push_back(prefix_assertion(e.spec, "01101001"));
  e.assertions.push_back({"mu maps each prefix onto a longer prefix", [mu, spec = e.spec](const Scale& scale) {
                            const std::size_t n = scale(1U << 14);
                            const auto s = take(spec, 2 * n);
                            const Word image = apply(mu, std::span<const Letter>(s.word).first(n));
                            return expect(std::equal(image.begin(), image.end(), s.word.begin()), "checked " + std::to_string(n));
                          }});
  e.assertions.push_back({"overlap-free on a prefix of 2^14", [spec = e.spec](const Scale& scale) {
                            const std::size_t n = scale(1U << 14);
                            const auto s = take(spec, n);
                            const auto hits = find_overlaps(s.word, n / 2);
                            return expect(hits.empty(), std::to_string(hits.size()) + " overlaps");
                          }});
  e.assertions.push_back(primitivity_assertion("mu", mu, 1));
  return e;
}

inline CorpusEntry named_fibonacci() {
  CorpusEntry e{"fibonacci", std::nullopt, "f", "Fibonacci word", words::fibonacci_word(),
                {{P::P5, true}}, {}, {}};
  e.assertions.push_back(prefix_assertion(e.spec, "01001010"));
  return e;
}

inline CorpusEntry named_thue_morse() {
  CorpusEntry e{"thue-morse", std::nullopt, "t", "Thue-Morse word", words::thue_morse_word(), {{P::P7, true}}, {}, {}};
  e.assertions.push_back(prefix_assertion(e.spec, "01101001"));
  return e;
}

inline CorpusEntry named_chi() {
  const auto m = words::fibonacci_positions();
  const Alphabet bits = Alphabet::of_chars("10");
  const Coding code(m.alphabet(), bits, {0, 0, 0, 1, 1});
  CorpusEntry e{"chi", std::nullopt, "chi", "characteristic word of the Fibonacci numbers",
                make_spec(Characteristic{IntegerSet::FibonacciNumbers}), {{P::P2, true}}, {}, {}};
  e.agreements.push_back({from_spec("characteristic word", e.spec),
                          from_spec("coded fixed point of c0->c0 e0, e0->c1, c1->c1 e1, e1->c2, c2->c2 e1",
                                    fixed_point_spec(m, "c0", code)),
                          100'000});
  e.assertions.push_back(prefix_assertion(e.spec, "11110100100001"));
  return e;
}

inline CorpusEntry named_rudin_shapiro() {
  const auto m = words::rudin_shapiro();
  CorpusEntry e{"rudin-shapiro", std::nullopt, "r", "Golay-Rudin-Shapiro sequence",
                fixed_point_spec(m, "a", words::coding(m, "abcd", "0011")), {{P::P8, true}}, {}, {}};
  e.assertions.push_back(prefix_assertion(e.spec, "0001001000011101"));
  return e;
}

inline CorpusEntry named_gamma() {
  const auto g = words::gamma();
  CorpusEntry e{"gamma", std::nullopt, "gamma-word", "fixed point of 0->03, 1->43, 3->1, 4->01",
                fixed_point_spec(g, "0"), {{P::P5, true}}, {}, {}};
  e.assertions.push_back(prefix_assertion(e.spec, "0314301103434303101101103"));
  e.assertions.push_back({"sixth powers of every letter", [g](const Scale&) {
                            const auto g6 = power(g, 6);
                            const std::map<std::string, std::string> expected = {
                                {"0", "03143011034343031011011"},
                                {"1", "03143011031011011031011011"},
                                {"3", "03143034343034343"},
                                {"4", "0314301103434303143034343034343"}};
                            for (const auto& [letter, image] : expected) {
                              const auto got = render(g.alphabet(), g6.image(g.alphabet().id(letter)));
                              if (got != image) return fail("gamma^6(" + letter + ") = " + got);
                            }
                            return pass();
                          }});
  e.assertions.push_back(primitivity_assertion("gamma", g, std::nullopt, 6));
  e.assertions.push_back({"no additive cubes with blocks <= 50 on a prefix of 10^4", [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(10'000));
                            std::vector<std::int64_t> values;
                            for (const auto& tok : s.alphabet.letters()) values.push_back(std::stoll(tok));
                            const auto hits = find_additive_cubes(s.word, values, 50);
                            return expect(hits.empty(), std::to_string(hits.size()) + " additive cubes");
                          }});
  return e;
}

inline CorpusEntry named_rote() {
  const auto g = words::rote();
  CorpusEntry e{"rote-fibonacci", std::nullopt, "R", "Rote-Fibonacci word",
                fixed_point_spec(g, "a", words::coding(g, "abcd", "0011")), {{P::P6, true}}, {}, {}};
  e.assertions.push_back(primitivity_assertion("the Rote morphism", g, std::nullopt, 2));
  e.assertions.push_back({"avoids x x reverse(x) with |x| <= 50 on a prefix of 10^4", [spec = e.spec](const Scale& scale) {
                            const auto s = take(spec, scale(10'000));
                            const auto hits = find_xxxR(s.word, 50);
                            return expect(hits.empty(), std::to_string(hits.size()) + " occurrences");
                          }});
  return e;
}

}  // namespace detail

// All entries: the 20 class examples (a)-(t) followed by the named words.
inline const std::vector<CorpusEntry>& list_entries() {
  static const std::vector<CorpusEntry> kEntries = [] {
    using namespace detail;
    std::vector<CorpusEntry> v = {entry_a(), entry_b(), entry_c(), entry_d(), entry_e(), entry_f(), entry_g(),
                                  entry_h(), entry_i(), entry_j(), entry_k(), entry_l(), entry_m(), entry_n(),
                                  entry_o(), entry_p(), entry_q(), entry_r(), entry_s(), entry_t(),
                                  named_fibonacci(), named_thue_morse(), named_chi(), named_rudin_shapiro(),
                                  named_gamma(), named_rote()};
    return v;
  }();
  return kEntries;
}

inline const CorpusEntry* find_entry(std::string_view key) {
  for (const auto& e : list_entries())
    if (e.key == key) return &e;
  return nullptr;
}

// Serialized form of the entry's construction: the spec-file text when the
// construction is morphic, otherwise a comment describing it.
inline std::string to_dsl(const CorpusEntry& e) {
  std::string header = "# " + e.key + ": " + e.title + "\n";
  if (auto doc = dsl::from_word_spec(*e.spec)) return header + dsl::print_spec(*doc);
  return header + "# construction: " + describe(*e.spec) + "\n";
}

inline VerifyReport verify(const CorpusEntry& entry, std::size_t budget = kDefaultBudget) {
  VerifyReport report{entry.key, {}};
  const Scale scale{budget};
  auto run = [&](const Assertion& a) {
    const auto t0 = std::chrono::steady_clock::now();
    AssertionOutcome o{a.name, false, {}, 0.0};
    try {
      auto r = a.run(scale);
      o.passed = r.passed;
      o.detail = std::move(r.detail);
    } catch (const std::exception& ex) {
      o.detail = std::string("error: ") + ex.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.outcomes.push_back(std::move(o));
  };

  run({"evidence closes to a consistent assignment" + std::string(entry.label ? " of its class" : ""),
       [&entry](const Scale&) {
         const auto closed = taxonomy::closure(entry.evidence);
         if (!closed.ok()) return detail::fail(closed.contradiction->describe());
         if (!entry.label) return detail::pass(closed.assignment.to_string());
         if (!closed.assignment.total()) return detail::fail("evidence leaves slots open: " + closed.assignment.to_string());
         const char got = taxonomy::class_label(closed.assignment);
         return detail::expect(got == *entry.label, std::string("class (") + got + ")");
       }});
  for (const auto& a : entry.agreements) run(detail::agreement_assertion(a));
  for (const auto& a : entry.assertions) run(a);
  return report;
}

}  // namespace morphic::corpus
