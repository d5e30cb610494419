#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "morphic/core.hpp"

using namespace morphic;

namespace {

Morphism phi() { return make_morphism({{"0", "01"}, {"1", "0"}}); }
Morphism mu() { return make_morphism({{"0", "01"}, {"1", "10"}}); }
Morphism gamma_m() { return make_morphism({{"0", "03"}, {"1", "43"}, {"3", "1"}, {"4", "01"}}); }

std::string img(const Morphism& m, std::string_view a) { return render(m.alphabet(), m.image(m.alphabet().id(a))); }

std::string run(const Morphism& m, std::string_view w) {
  return render(m.alphabet(), apply(m, make_word(m.alphabet(), w)));
}

Morphism random_morphism(std::mt19937& rng, std::size_t k, std::size_t max_len, bool allow_empty) {
  std::vector<std::string> letters;
  for (std::size_t i = 0; i < k; ++i) letters.push_back(std::string(1, static_cast<char>('a' + i)));
  std::uniform_int_distribution<std::size_t> len(allow_empty ? 0 : 1, max_len), pick(0, k - 1);
  std::vector<Word> images(k);
  for (auto& w : images) {
    w.resize(len(rng));
    for (auto& x : w) x = static_cast<Letter>(pick(rng));
  }
  return Morphism(Alphabet(letters), images);
}

Word random_word(std::mt19937& rng, std::size_t k, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  Word w(n);
  for (auto& x : w) x = static_cast<Letter>(pick(rng));
  return w;
}

}  // namespace

TEST(Alphabet, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(Alphabet(std::vector<std::string>{}), InvalidArgument);
  EXPECT_THROW(Alphabet({"a", "b", "a"}), InvalidArgument);
  const Alphabet a({"c0", "e0"});
  EXPECT_EQ(a.id("e0"), 1U);
  EXPECT_THROW(a.id("x"), AlphabetMismatch);
  EXPECT_FALSE(a.single_char());
}

TEST(Render, SpacesOnlyForMultiCharLetters) {
  const Alphabet multi({"c0", "e1"});
  EXPECT_EQ(render(multi, make_word(multi, std::vector<std::string>{"c0", "e1", "c0"})), "c0 e1 c0");
  EXPECT_EQ(run(phi(), "010"), "01001");
}

TEST(Apply, PaperExamples) {
  EXPECT_EQ(run(phi(), "0"), "01");
  EXPECT_EQ(run(mu(), "01"), "0110");
  EXPECT_TRUE(apply(gamma_m(), Word{}).empty());
}

TEST(Apply, RejectsForeignLetters) { EXPECT_THROW(apply(phi(), Word{0, 2}), AlphabetMismatch); }

TEST(Apply, HomomorphismLaw) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 1 + trial % 4;
    const auto m = random_morphism(rng, k, 4, true);
    const Word x = random_word(rng, k, trial % 9), y = random_word(rng, k, trial % 5);
    Word xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    Word hx = apply(m, x), hy = apply(m, y);
    hx.insert(hx.end(), hy.begin(), hy.end());
    ASSERT_EQ(apply(m, xy), hx);
  }
}

TEST(Compose, Examples) {
  EXPECT_EQ(img(compose(phi(), phi()), "0"), "010");
  // γ(γ(0)) = γ(0)γ(3) = 03·1.
  EXPECT_EQ(img(compose(gamma_m(), gamma_m()), "0"), "031");
  const auto g = gamma_m();
  EXPECT_EQ(compose(Morphism::identity(g.alphabet()), g), g);
  EXPECT_EQ(compose(g, Morphism::identity(g.alphabet())), g);
  EXPECT_THROW(compose(phi(), gamma_m()), AlphabetMismatch);
}

TEST(Compose, AppliesInnerFirst) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + trial % 4;
    const auto f = random_morphism(rng, k, 3, true), g = random_morphism(rng, k, 3, true);
    const Word w = random_word(rng, k, 6);
    ASSERT_EQ(apply(compose(f, g), w), apply(f, apply(g, w)));
  }
}

TEST(Power, Examples) {
  EXPECT_EQ(img(power(gamma_m(), 6), "3"), "03143034343034343");
  EXPECT_EQ(img(power(gamma_m(), 6), "0"), "03143011034343031011011");
  EXPECT_EQ(img(power(phi(), 3), "0"), "01001");
  EXPECT_EQ(power(gamma_m(), 0), Morphism::identity(gamma_m().alphabet()));
}

TEST(Power, BudgetIsEnforced) {
  try {
    (void)power(mu(), 30, 1000);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 1000U);
    EXPECT_GT(e.requested(), 1000U);
  }
}

TEST(IncidenceMatrix, Examples) {
  const auto M = incidence_matrix(phi());
  EXPECT_EQ(M.at(0, 0), 1U);
  EXPECT_EQ(M.at(0, 1), 1U);
  EXPECT_EQ(M.at(1, 0), 1U);
  EXPECT_EQ(M.at(1, 1), 0U);
  const auto T = incidence_matrix(mu());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(T.at(i, j), 1U);
}

TEST(IncidenceMatrix, CodingRowsHaveOneEntry) {
  const auto c = make_morphism({{"a", "b"}, {"b", "b"}, {"c", "a"}});
  const auto M = incidence_matrix(c);
  for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(M.row_sum(r), 1U);
}

TEST(IncidenceMatrix, CompositionIsMatrixProduct) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + trial % 4;
    const auto f = random_morphism(rng, k, 3, true), g = random_morphism(rng, k, 3, true);
    // Rows index source letters, so M(f∘g) = M(g)·M(f).
    ASSERT_EQ(incidence_matrix(compose(f, g)), incidence_matrix(g) * incidence_matrix(f));
  }
}

TEST(Occurrences, Examples) {
  const auto A = Alphabet::of_chars("01");
  EXPECT_EQ(occurrences(make_word(A, "0110"), make_word(A, "11")), (std::vector<std::size_t>{1}));
  EXPECT_EQ(occurrences(make_word(A, "1111"), make_word(A, "11")), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_THROW(occurrences(make_word(A, "1111"), Word{}), InvalidArgument);
}

TEST(Occurrences, MatchesNaiveScan) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + trial % 3;
    const Word w = random_word(rng, k, 60), x = random_word(rng, k, 1 + trial % 4);
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i + x.size() <= w.size(); ++i)
      if (std::equal(x.begin(), x.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) expected.push_back(i);
    ASSERT_EQ(occurrences(w, x), expected);
  }
}

TEST(BaseKValue, Examples) {
  const auto digits = Alphabet::of_chars("012");
  EXPECT_EQ(base_k_value(digits, make_word(digits, "20"), 3), 6);
  EXPECT_EQ(base_k_value(digits, Word{}, 3), 0);
  EXPECT_EQ(base_k_value(digits, make_word(digits, "101"), 2), 5);
  EXPECT_THROW(base_k_value(digits, make_word(digits, "2"), 2), InvalidArgument);
  const auto letters = Alphabet::of_chars("ab");
  EXPECT_THROW(base_k_value(letters, make_word(letters, "ab"), 10), InvalidArgument);
}

TEST(BaseKValue, BigNumerals) {
  const auto digits = Alphabet::of_chars("012");
  Word w;
  for (int i = 0; i < 40; ++i) w.insert(w.end(), {2, 0});
  BigInt expected = 1;
  for (int i = 0; i < 81; ++i) expected *= 3;
  EXPECT_EQ(base_k_value(digits, w, 3), (expected - 3) / 4);
}

TEST(ClassifyShape, Examples) {
  const auto t = classify_shape(mu());
  EXPECT_EQ(t.uniform_length, 2U);
  EXPECT_TRUE(t.nonerasing);
  EXPECT_FALSE(t.coding);
  const auto f = classify_shape(phi());
  EXPECT_FALSE(f.uniform_length);
  EXPECT_TRUE(f.nonerasing);
  const auto e = classify_shape(make_morphism({{"a", "ab"}, {"b", ""}}));
  EXPECT_FALSE(e.nonerasing);
  EXPECT_TRUE(classify_shape(make_morphism({{"a", "b"}, {"b", "a"}})).coding);
}

TEST(Coding, TargetAlphabetInFirstAppearanceOrder) {
  const auto src = Alphabet::of_chars("abcd");
  const auto c = Coding::of_chars(src, "abcd", "2201");
  EXPECT_EQ(c.target().letters(), (std::vector<std::string>{"2", "0", "1"}));
  EXPECT_EQ(render(c.target(), c.apply(make_word(src, "dcba"))), "1022");
}
