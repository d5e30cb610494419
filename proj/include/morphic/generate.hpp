#pragma once

// Letter structure of D0L systems and lazy fixed-point generation.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "morphic/core.hpp"

namespace morphic {

inline constexpr std::size_t kDefaultPrefixBudget = 10'000'000;

struct LetterStructure {
  std::vector<bool> mortal;
  std::vector<bool> growing;
  Morphism reduced;  // mortal letters erased from every image

  bool is_mortal(Letter a) const { return mortal.at(a); }
  bool is_growing(Letter a) const { return growing.at(a); }
};

namespace detail {

inline std::vector<bool> mortal_letters(const Morphism& m) {
  const std::size_t n = m.size();
  std::vector<bool> mortal(n, false);
  // Fixpoint: b is mortal once every letter of m(b) is; at most n rounds.
  for (bool changed = true; changed;) {
    changed = false;
    for (Letter b = 0; b < n; ++b) {
      if (mortal[b]) continue;
      bool dies = true;
      for (Letter c : m.image(b)) dies = dies && mortal[c];
      if (dies) mortal[b] = changed = true;
    }
  }
  return mortal;
}

}  // namespace detail

inline LetterStructure letter_structure(const Morphism& m) {
  const std::size_t n = m.size();
  LetterStructure ls;
  ls.mortal = detail::mortal_letters(m);

  std::vector<Word> reduced(n);
  for (Letter a = 0; a < n; ++a)
    for (Letter b : m.image(a))
      if (!ls.mortal[b]) reduced[a].push_back(b);
  ls.reduced = Morphism(m.alphabet(), std::move(reduced));

  // reach[a][c]: c occurs in some m'^k(a), k >= 1.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (Letter a = 0; a < n; ++a)
    for (Letter b : ls.reduced.image(a)) reach[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;

  std::vector<bool> pump(n, false);  // on a cycle with |m'(c)| >= 2
  for (Letter c = 0; c < n; ++c) pump[c] = !ls.mortal[c] && reach[c][c] && ls.reduced.image(c).size() >= 2;

  ls.growing.assign(n, false);
  for (Letter a = 0; a < n; ++a) {
    if (ls.mortal[a]) continue;
    bool g = pump[a];
    for (Letter c = 0; c < n && !g; ++c) g = reach[a][c] && pump[c];
    ls.growing[a] = g;
  }
  return ls;
}

// m(a) = a·x where some letter of x never dies.
inline bool is_prolongable(const Morphism& m, Letter a) {
  const Word& img = m.image(a);
  if (img.size() < 2 || img[0] != a) return false;
  const auto mortal = detail::mortal_letters(m);
  for (std::size_t i = 1; i < img.size(); ++i)
    if (!mortal[img[i]]) return true;
  return false;
}

// h^n(w), failing cleanly if an intermediate word would exceed `budget`.
inline Word iterate(const Morphism& m, Word w, std::size_t n, std::size_t budget = kDefaultImageBudget) {
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t next = 0;
    for (Letter a : w) next += m.image(a).size();
    if (next > budget) throw BudgetExceeded(next, budget);
    w = apply(m, w);
  }
  return w;
}

// Lazily materialized prefix of h^ω(a), optionally passed through a coding.
//
// Expansion works as a queue: the buffer holds a prefix of the fixed point
// and the letter at `cursor_` is the next one whose image gets appended.
// Since h(w) = w, the image of w[i] always lands right after the images of
// w[0..i-1], so each appended symbol is final.
class WordStream {
 public:
  WordStream(Morphism m, Letter seed, std::optional<Coding> coding = std::nullopt)
      : morphism_(std::move(m)), seed_(seed), coding_(std::move(coding)) {
    if (seed_ >= morphism_.size()) throw AlphabetMismatch("seed letter outside the alphabet");
    if (!is_prolongable(morphism_, seed_))
      throw NotProlongable("morphism is not prolongable on '" + morphism_.alphabet().name(seed_) + "'");
    if (coding_ && !(coding_->source() == morphism_.alphabet()))
      throw AlphabetMismatch("coding source differs from the morphism alphabet");
    buffer_ = morphism_.image(seed_);
    cursor_ = 1;
  }

  const Morphism& morphism() const { return morphism_; }
  Letter seed() const { return seed_; }
  const std::optional<Coding>& coding() const { return coding_; }

  // Alphabet of the emitted symbols.
  const Alphabet& alphabet() const { return coding_ ? coding_->target() : morphism_.alphabet(); }

  std::size_t materialized() const { return buffer_.size(); }

  // First n symbols of the (coded) fixed point.
  Word prefix(std::size_t n, std::size_t budget = kDefaultPrefixBudget) {
    ensure(n, budget);
    Word out(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(n));
    return coding_ ? coding_->apply(out) : out;
  }

  // Uncoded prefix of h^ω(a).
  std::span<const Letter> raw_prefix(std::size_t n, std::size_t budget = kDefaultPrefixBudget) {
    ensure(n, budget);
    return std::span<const Letter>(buffer_).first(n);
  }

  Letter at(std::size_t i, std::size_t budget = kDefaultPrefixBudget) {
    ensure(i + 1, budget);
    return coding_ ? (*coding_)(buffer_[i]) : buffer_[i];
  }

 private:
  void ensure(std::size_t n, std::size_t budget) {
    if (n > budget) throw BudgetExceeded(n, budget);
    while (buffer_.size() < n) {
      if (cursor_ >= buffer_.size()) throw Error("fixed-point expansion stalled");
      const Word& img = morphism_.image(buffer_[cursor_++]);
      buffer_.insert(buffer_.end(), img.begin(), img.end());
    }
  }

  Morphism morphism_;
  Letter seed_;
  std::optional<Coding> coding_;
  Word buffer_;
  std::size_t cursor_ = 0;
};

inline WordStream fixed_point_stream(const Morphism& m, Letter seed, std::optional<Coding> coding = std::nullopt) {
  return WordStream(m, seed, std::move(coding));
}

}  // namespace morphic
