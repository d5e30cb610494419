#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "morphic/analyze.hpp"

using namespace morphic;

namespace {

Morphism phi() { return make_morphism({{"0", "01"}, {"1", "0"}}); }
Morphism mu() { return make_morphism({{"0", "01"}, {"1", "10"}}); }
Morphism gamma_m() { return make_morphism({{"0", "03"}, {"1", "43"}, {"3", "1"}, {"4", "01"}}); }
Morphism ternary() { return make_morphism({{"2", "210"}, {"1", "20"}, {"0", "1"}}); }

Word fixed_prefix(const Morphism& m, std::string_view seed, std::size_t n) {
  WordStream s(m, m.alphabet().id(seed));
  return s.prefix(n);
}

Word digits(std::string_view s) {
  Word w;
  for (char c : s) w.push_back(static_cast<Letter>(c - '0'));
  return w;
}

Word random_word(std::mt19937& rng, std::size_t k, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  Word w(n);
  for (auto& x : w) x = static_cast<Letter>(pick(rng));
  return w;
}

// Least n with every letter in every h^n(a), found by expanding letter sets.
std::optional<std::size_t> letter_set_primitivity(const Morphism& m, std::size_t max_n) {
  const std::size_t k = m.size();
  std::vector<std::set<Letter>> reach(k);
  for (Letter a = 0; a < k; ++a) reach[a] = std::set<Letter>(m.image(a).begin(), m.image(a).end());
  for (std::size_t n = 1; n <= max_n; ++n) {
    bool all = true;
    for (const auto& r : reach) all = all && r.size() == k;
    if (all) return n;
    std::vector<std::set<Letter>> next(k);
    for (Letter a = 0; a < k; ++a)
      for (Letter b : reach[a]) next[a].insert(m.image(b).begin(), m.image(b).end());
    reach = std::move(next);
  }
  return std::nullopt;
}

std::vector<std::size_t> naive_complexity(const Word& w, std::size_t n_max) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::set<Word> seen;
    for (std::size_t i = 0; i + n <= w.size(); ++i) seen.emplace(w.begin() + i, w.begin() + i + n);
    out.push_back(seen.size());
  }
  return out;
}

std::vector<Occurrence> naive_powers(const Word& w, std::size_t k, std::size_t max_p) {
  std::vector<Occurrence> out;
  for (std::size_t p = 1; p <= max_p; ++p)
    for (std::size_t i = 0; i + k * p <= w.size(); ++i) {
      bool ok = true;
      for (std::size_t j = p; j < k * p && ok; ++j) ok = w[i + j] == w[i + j - p];
      if (ok) out.push_back({i, p});
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Primitivity, Examples) {
  EXPECT_EQ(primitivity(phi()), 2U);
  const auto g = primitivity(gamma_m());
  ASSERT_TRUE(g);
  EXPECT_LE(*g, 6U);
  EXPECT_FALSE(primitivity(make_morphism({{"0", "0010"}, {"1", "1"}})));
  EXPECT_EQ(primitivity(mu()), 1U);
}

TEST(Primitivity, MatchesLetterSetExpansion) {
  std::mt19937 rng(17);
  std::size_t primitive_seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t k = 1 + static_cast<std::size_t>(trial % 4);
    std::vector<std::string> letters;
    for (std::size_t i = 0; i < k; ++i) letters.emplace_back(1, static_cast<char>('a' + i));
    std::uniform_int_distribution<std::size_t> len(1, 3), pick(0, k - 1);
    std::vector<Word> images(k);
    for (auto& w : images) {
      w.resize(len(rng));
      for (auto& x : w) x = static_cast<Letter>(pick(rng));
    }
    const Morphism m(Alphabet(letters), images);
    // Beyond the Wielandt bound a non-primitive morphism stays non-primitive.
    const auto oracle = letter_set_primitivity(m, 4 * k * k + 4);
    ASSERT_EQ(primitivity(m), oracle) << "trial " << trial;
    primitive_seen += oracle.has_value();
  }
  EXPECT_GT(primitive_seen, 200U);
}

TEST(FactorComplexity, Examples) {
  const auto f = fixed_prefix(phi(), "0", 10'000);
  const auto p = factor_complexity(f, 4);
  EXPECT_EQ(p.values, (std::vector<std::size_t>{2, 3, 4, 5}));
  const Word zeros(100, 0);
  for (auto v : factor_complexity(zeros, 50).values) EXPECT_EQ(v, 1U);
  EXPECT_THROW(factor_complexity(zeros, 51), InvalidArgument);
}

TEST(FactorComplexity, MatchesNaiveOracle) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + static_cast<std::size_t>(trial % 3);
    const Word w = random_word(rng, k, 20 + static_cast<std::size_t>(trial) * 3);
    const std::size_t n_max = w.size() / 2;
    ASSERT_EQ(factor_complexity(w, n_max).values, naive_complexity(w, n_max)) << "trial " << trial;
  }
}

TEST(SuffixIndex, GroupsListEveryStart) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Word w = random_word(rng, 2, 60);
    const SuffixIndex index(w);
    for (std::size_t n = 1; n <= 6; ++n) {
      std::map<Word, std::set<std::size_t>> expected;
      for (std::size_t i = 0; i + n <= w.size(); ++i) expected[Word(w.begin() + i, w.begin() + i + n)].insert(i);
      std::map<Word, std::set<std::size_t>> got;
      index.for_each_factor(n, [&](std::span<const std::size_t> starts) {
        const Word key(w.begin() + starts[0], w.begin() + starts[0] + n);
        ASSERT_TRUE(got[key].empty());
        got[key].insert(starts.begin(), starts.end());
      });
      ASSERT_EQ(got, expected);
    }
  }
}

TEST(GapReport, ThueMorseZeros) {
  const auto t = fixed_prefix(mu(), "0", 1U << 12);
  const auto r = gap_report(t, Word{0});
  ASSERT_TRUE(r.max_gap);
  EXPECT_LE(*r.max_gap, 3U);
  EXPECT_EQ(r.scanned_length, t.size());
}

TEST(GapReport, SingleOccurrenceHasNoGap) {
  const auto r = gap_report(digits("0110000"), digits("11"));
  EXPECT_EQ(r.positions, (std::vector<std::size_t>{1}));
  EXPECT_FALSE(r.max_gap);
}

TEST(Recurrence, NonRecurringFactorsOfEventuallyConstantWord) {
  Word w = digits("0120");
  w.resize(100, 1);
  const auto missing = non_recurring_factors(w, 4, 2);
  std::set<Word> got(missing.begin(), missing.end());
  EXPECT_TRUE(got.count(digits("0")));
  EXPECT_TRUE(got.count(digits("2")));
  EXPECT_FALSE(got.count(digits("1")));
  EXPECT_TRUE(non_recurring_factors(fixed_prefix(mu(), "0", 4096), 256, 8).empty());
}

TEST(Recurrence, WorstWindowOfPeriodicWord) {
  Word w;
  for (int i = 0; i < 100; ++i) w.insert(w.end(), {0, 1, 1});
  const auto r = uniform_recurrence_evidence(w, 3);
  // Every window of length 5 in (011)^100 contains each factor of length <= 3.
  EXPECT_EQ(r.worst_window, 5U);
}

TEST(Frequencies, Perron) {
  const auto f = perron_frequencies(phi());
  EXPECT_NEAR(f[0], (std::sqrt(5.0) - 1.0) / 2.0, 1e-9);
  const auto t = perron_frequencies(mu());
  EXPECT_NEAR(t[0], 0.5, 1e-12);
  EXPECT_NEAR(t[1], 0.5, 1e-12);
  EXPECT_THROW(perron_frequencies(make_morphism({{"0", "0010"}, {"1", "1"}})), ConvergenceError);
}

TEST(Frequencies, EmpiricalApproachesTheoretical) {
  for (const auto& [m, seed] : std::vector<std::pair<Morphism, std::string>>{{phi(), "0"}, {mu(), "0"}, {ternary(), "2"}}) {
    const auto w = fixed_prefix(m, seed, 1'000'000);
    const auto r = letter_frequency(m.size(), w, m);
    ASSERT_TRUE(r.theoretical);
    EXPECT_LT(r.residual, kPerronTolerance);
    for (Letter a = 0; a < m.size(); ++a) EXPECT_NEAR(r.empirical(a), (*r.theoretical)[a], 1e-3);
  }
}

TEST(Powers, Examples) {
  EXPECT_EQ(find_k_powers(digits("000"), 3, 5), (std::vector<Occurrence>{{0, 1}}));
  const auto g = fixed_prefix(ternary(), "2", 100'000);
  EXPECT_TRUE(find_k_powers(g, 2, 100).empty());
  EXPECT_THROW(find_k_powers(g, 1, 3), InvalidArgument);
}

TEST(Powers, MatchesNaiveScan) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = random_word(rng, 2 + trial % 2, 80);
    for (std::size_t k : {2U, 3U})
      ASSERT_EQ(find_k_powers(w, k, 12), naive_powers(w, k, 12)) << "trial " << trial;
  }
}

TEST(Powers, RudinShapiroCubes) {
  const auto rs = make_morphism({{"a", "ab"}, {"b", "ac"}, {"c", "db"}, {"d", "dc"}});
  WordStream s(rs, 0, Coding::of_chars(rs.alphabet(), "abcd", "0011"));
  const auto w = s.prefix(100'000);
  const auto hits = find_k_powers(w, 3, 20);
  ASSERT_FALSE(hits.empty());
  for (const auto& h : hits) EXPECT_EQ(h.period, 1U);
}

TEST(Overlaps, Examples) {
  EXPECT_EQ(find_overlaps(digits("01010"), 5), (std::vector<Occurrence>{{0, 2}}));
  const auto z = find_overlaps(digits("00000"), 2);
  EXPECT_NE(std::find(z.begin(), z.end(), Occurrence{0, 1}), z.end());
  EXPECT_TRUE(find_overlaps(fixed_prefix(mu(), "0", 1U << 14), 1U << 13).empty());
}

TEST(AdditiveCubes, Examples) {
  const std::vector<std::int64_t> values{0, 1, 2, 3};
  const auto hits = find_additive_cubes(digits("012012012"), values, 3);
  EXPECT_NE(std::find(hits.begin(), hits.end(), Occurrence{0, 3}), hits.end());
  const auto planted = find_additive_cubes(digits("031221"), values, 2);
  EXPECT_NE(std::find(planted.begin(), planted.end(), Occurrence{0, 2}), planted.end());
  EXPECT_THROW(find_additive_cubes(digits("4"), values, 1), InvalidArgument);
}

TEST(AdditiveCubes, GammaWordAvoidsThem) {
  const auto g = gamma_m();
  const auto w = fixed_prefix(g, "0", 10'000);
  std::vector<std::int64_t> values;
  for (const auto& tok : g.alphabet().letters()) values.push_back(std::stoll(tok));
  EXPECT_TRUE(find_additive_cubes(w, values, 50).empty());
}

TEST(XxxR, Examples) {
  EXPECT_EQ(find_xxxR(digits("010110"), 2), (std::vector<Occurrence>{{0, 2}}));
  EXPECT_EQ(find_xxxR(digits("000"), 1), (std::vector<Occurrence>{{0, 1}}));
  EXPECT_TRUE(find_xxxR(digits("0110"), 1).empty());
}

TEST(ArithmeticSubsequence, Examples) {
  const auto t = fixed_prefix(mu(), "0", 4096);
  // t[2n] = t[n].
  EXPECT_EQ(arithmetic_subsequence(t, 0, 2, 1024), Word(t.begin(), t.begin() + 1024));
  EXPECT_EQ(arithmetic_subsequence(Word(50, 1), 3, 7, 5), Word(5, 1));
  EXPECT_THROW(arithmetic_subsequence(t, 0, 5, 1000), InvalidArgument);
  EXPECT_THROW(arithmetic_subsequence(t, 0, 0, 10), InvalidArgument);
}

TEST(Runs, Examples) { EXPECT_EQ(run_statistics(digits("0110"), 1), (std::vector<morphic::Run>{{1, 2}})); }

TEST(OccurrenceGrowth, ThueMorseIsBalancedOnBlocks) {
  WordStream s(mu(), 0);
  std::vector<std::size_t> checkpoints;
  for (std::size_t k = 0; k <= 14; ++k) checkpoints.push_back(std::size_t{1} << k);
  const auto counts = occurrence_growth(s, 0, checkpoints);
  for (std::size_t k = 1; k <= 14; ++k) EXPECT_EQ(counts[k], std::size_t{1} << (k - 1));
  const std::vector<std::size_t> zero{0};
  EXPECT_EQ(occurrence_growth(digits("111"), 1, zero), (std::vector<std::size_t>{0}));
  const std::vector<std::size_t> unsorted{3, 1};
  EXPECT_THROW(occurrence_growth(digits("111"), 1, unsorted), InvalidArgument);
}
