#pragma once

// Alphabets, finite words, morphisms, codings and their exact algebra.

#include <algorithm>
#include <charconv>
#include <concepts>
#include <type_traits>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "morphic/error.hpp"

namespace morphic {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultImageBudget = 100'000'000;

// An ordered set of distinct, non-empty symbol tokens with dense ids.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw InvalidArgument("alphabet must contain at least one letter");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i].empty()) throw InvalidArgument("alphabet letters must be non-empty");
      if (!index_.emplace(letters_[i], static_cast<Letter>(i)).second)
        throw InvalidArgument("duplicate letter '" + letters_[i] + "' in alphabet");
    }
  }

  // Every character of `chars` is one letter.
  static Alphabet of_chars(std::string_view chars) {
    std::vector<std::string> letters;
    for (char c : chars) letters.emplace_back(1, c);
    return Alphabet(std::move(letters));
  }

  std::size_t size() const { return letters_.size(); }
  const std::vector<std::string>& letters() const { return letters_; }
  const std::string& name(Letter id) const { return letters_.at(id); }

  bool contains(std::string_view token) const { return index_.count(std::string(token)) != 0; }

  std::optional<Letter> find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Letter id(std::string_view token) const {
    if (auto found = find(token)) return *found;
    throw AlphabetMismatch("letter '" + std::string(token) + "' is not in the alphabet");
  }

  bool single_char() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const std::string& s) { return s.size() == 1; });
  }

  bool valid(const Word& w) const {
    return std::all_of(w.begin(), w.end(), [&](Letter a) { return a < size(); });
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

 private:
  std::vector<std::string> letters_;
  std::unordered_map<std::string, Letter> index_;
};

// Word from a string where each character is a letter token.
inline Word make_word(const Alphabet& alphabet, std::string_view chars) {
  Word w;
  w.reserve(chars.size());
  for (char c : chars) w.push_back(alphabet.id(std::string_view(&c, 1)));
  return w;
}

inline Word make_word(const Alphabet& alphabet, const std::vector<std::string>& tokens) {
  Word w;
  w.reserve(tokens.size());
  for (const auto& t : tokens) w.push_back(alphabet.id(t));
  return w;
}

// Concatenated letters when every letter is one character, otherwise
// whitespace-separated tokens.
inline std::string render(const Alphabet& alphabet, std::span<const Letter> w) {
  std::string out;
  const bool compact = alphabet.single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i != 0) out.push_back(' ');
    out += alphabet.name(w[i]);
  }
  return out;
}

inline std::vector<std::size_t> letter_counts(std::size_t alphabet_size, std::span<const Letter> w) {
  std::vector<std::size_t> counts(alphabet_size, 0);
  for (Letter a : w) ++counts.at(a);
  return counts;
}

class Morphism {
 public:
  Morphism() = default;

  Morphism(Alphabet alphabet, std::vector<Word> images)
      : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (images_.size() != alphabet_.size())
      throw InvalidArgument("morphism needs exactly one image per letter");
    for (const auto& img : images_)
      if (!alphabet_.valid(img)) throw AlphabetMismatch("morphism image uses a letter outside the alphabet");
  }

  static Morphism identity(const Alphabet& alphabet) {
    std::vector<Word> images(alphabet.size());
    for (Letter a = 0; a < alphabet.size(); ++a) images[a] = {a};
    return Morphism(alphabet, std::move(images));
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return images_.size(); }
  const Word& image(Letter a) const { return images_.at(a); }
  const Word& operator()(Letter a) const { return image(a); }
  const std::vector<Word>& images() const { return images_; }

  std::size_t max_image_length() const {
    std::size_t m = 0;
    for (const auto& img : images_) m = std::max(m, img.size());
    return m;
  }

  std::size_t total_image_length() const {
    std::size_t s = 0;
    for (const auto& img : images_) s += img.size();
    return s;
  }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.alphabet_ == b.alphabet_ && a.images_ == b.images_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

// Builds a morphism over single-character letters from a table like
// {{"0", "01"}, {"1", "0"}}. The alphabet is the left-hand sides in order.
inline Morphism make_morphism(std::initializer_list<std::pair<std::string_view, std::string_view>> table) {
  std::string letters;
  for (const auto& [lhs, rhs] : table) {
    if (lhs.size() != 1) throw InvalidArgument("make_morphism expects single-character letters");
    letters += lhs;
  }
  Alphabet alphabet = Alphabet::of_chars(letters);
  std::vector<Word> images;
  for (const auto& [lhs, rhs] : table) images.push_back(make_word(alphabet, rhs));
  return Morphism(std::move(alphabet), std::move(images));
}

// A letter-to-letter map between two alphabets (a 1-uniform morphism).
class Coding {
 public:
  Coding() = default;

  Coding(Alphabet source, Alphabet target, std::vector<Letter> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (map_.size() != source_.size()) throw InvalidArgument("coding must map every source letter");
    if (!target_.valid(map_)) throw AlphabetMismatch("coding maps to a letter outside its target");
  }

  // Coding `from[i] -> to[i]` over single-character letters; the target
  // alphabet lists the image characters in order of first appearance.
  static Coding of_chars(const Alphabet& source, std::string_view from, std::string_view to) {
    if (from.size() != to.size()) throw InvalidArgument("coding shorthand needs equal-length sides");
    std::string target_chars;
    for (char c : to)
      if (target_chars.find(c) == std::string::npos) target_chars.push_back(c);
    Alphabet target = Alphabet::of_chars(target_chars);
    std::vector<std::optional<Letter>> partial(source.size());
    for (std::size_t i = 0; i < from.size(); ++i)
      partial[source.id(std::string_view(&from[i], 1))] = target.id(std::string_view(&to[i], 1));
    std::vector<Letter> map;
    for (const auto& p : partial) {
      if (!p) throw InvalidArgument("coding shorthand leaves a source letter unmapped");
      map.push_back(*p);
    }
    return Coding(source, std::move(target), std::move(map));
  }

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  Letter operator()(Letter a) const { return map_.at(a); }
  const std::vector<Letter>& map() const { return map_; }

  Word apply(std::span<const Letter> w) const {
    Word out;
    out.reserve(w.size());
    for (Letter a : w) out.push_back(map_.at(a));
    return out;
  }

  friend bool operator==(const Coding& a, const Coding& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.map_ == b.map_;
  }

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Letter> map_;
};

// entries[a][b] = number of occurrences of b in h(a); rows are source letters.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(std::size_t n = 0) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::uint64_t& at(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  std::uint64_t at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

  std::uint64_t row_sum(std::size_t row) const {
    std::uint64_t s = 0;
    for (std::size_t c = 0; c < n_; ++c) s += at(row, c);
    return s;
  }

  friend IncidenceMatrix operator*(const IncidenceMatrix& x, const IncidenceMatrix& y) {
    if (x.n_ != y.n_) throw InvalidArgument("matrix dimensions differ");
    IncidenceMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const auto xik = x.at(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r.at(i, j) += xik * y.at(k, j);
      }
    return r;
  }

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> entries_;
};

inline Word apply(const Morphism& m, std::span<const Letter> w) {
  std::size_t length = 0;
  for (Letter a : w) {
    if (a >= m.size()) throw AlphabetMismatch("word uses a letter outside the morphism's alphabet");
    length += m.image(a).size();
  }
  Word out;
  out.reserve(length);
  for (Letter a : w) {
    const Word& img = m.image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

// Words are std::vectors, so an unqualified apply(m, w) would otherwise find
// std::apply through argument-dependent lookup.
template <typename M, typename W>
  requires std::same_as<std::remove_cvref_t<M>, Morphism> && std::convertible_to<W, std::span<const Letter>>
Word apply(M&& m, W&& w) {
  return apply(static_cast<const Morphism&>(m), std::span<const Letter>(w));
}

// (outer ∘ inner)(a) = outer(inner(a)).
inline Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!(outer.alphabet() == inner.alphabet()))
    throw AlphabetMismatch("cannot compose morphisms over different alphabets");
  std::vector<Word> images;
  images.reserve(inner.size());
  for (const auto& img : inner.images()) images.push_back(apply(outer, img));
  return Morphism(inner.alphabet(), std::move(images));
}

// n-fold composition. Fails once the summed image length would exceed `budget`.
inline Morphism power(const Morphism& m, std::size_t n, std::size_t budget = kDefaultImageBudget) {
  Morphism result = Morphism::identity(m.alphabet());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t next = 0;
    for (const auto& img : result.images())
      for (Letter b : img) next += m.image(b).size();
    if (next > budget) throw BudgetExceeded(next, budget);
    result = compose(m, result);
  }
  return result;
}

inline IncidenceMatrix incidence_matrix(const Morphism& m) {
  IncidenceMatrix M(m.size());
  for (Letter a = 0; a < m.size(); ++a)
    for (Letter b : m.image(a)) ++M.at(a, b);
  return M;
}

// Start positions of all (possibly overlapping) occurrences of x in w.
inline std::vector<std::size_t> occurrences(std::span<const Letter> w, std::span<const Letter> x) {
  if (x.empty()) throw InvalidArgument("occurrences: pattern must be non-empty");
  // Knuth-Morris-Pratt failure function.
  std::vector<std::size_t> fail(x.size(), 0);
  for (std::size_t i = 1, k = 0; i < x.size(); ++i) {
    while (k > 0 && x[i] != x[k]) k = fail[k - 1];
    if (x[i] == x[k]) ++k;
    fail[i] = k;
  }
  std::vector<std::size_t> hits;
  for (std::size_t i = 0, k = 0; i < w.size(); ++i) {
    while (k > 0 && w[i] != x[k]) k = fail[k - 1];
    if (w[i] == x[k]) ++k;
    if (k == x.size()) {
      hits.push_back(i + 1 - x.size());
      k = fail[k - 1];
    }
  }
  return hits;
}

// Integer value of w read as base-k digits; every letter token must be a
// decimal numeral smaller than k.
inline BigInt base_k_value(const Alphabet& alphabet, std::span<const Letter> w, unsigned k) {
  if (k < 2) throw InvalidArgument("base must be at least 2");
  std::vector<unsigned> digit(alphabet.size());
  std::vector<bool> ok(alphabet.size(), false);
  for (Letter a = 0; a < alphabet.size(); ++a) {
    const std::string& tok = alphabet.name(a);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    ok[a] = ec == std::errc{} && ptr == tok.data() + tok.size() && v < k;
    digit[a] = v;
  }
  BigInt value = 0;
  for (Letter a : w) {
    if (a >= alphabet.size() || !ok[a])
      throw InvalidArgument("letter is not a base-" + std::to_string(k) + " digit");
    value = value * k + digit[a];
  }
  return value;
}

struct MorphismShape {
  std::optional<std::size_t> uniform_length;  // set iff all images share one length
  bool nonerasing = true;
  bool coding = false;
};

inline MorphismShape classify_shape(const Morphism& m) {
  MorphismShape shape;
  const auto& images = m.images();
  shape.nonerasing = std::none_of(images.begin(), images.end(), [](const Word& w) { return w.empty(); });
  if (!images.empty() &&
      std::all_of(images.begin(), images.end(), [&](const Word& w) { return w.size() == images[0].size(); }))
    shape.uniform_length = images[0].size();
  shape.coding = shape.uniform_length == std::size_t{1};
  return shape;
}

}  // namespace morphic
