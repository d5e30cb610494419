#pragma once

// Words that carry their own alphabet, plus generators for sequences that are
// not given by a morphism: characteristic words, base-k concatenation, ruler
// images, and Sturmian words with exact floor evaluation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "morphic/core.hpp"

namespace morphic {

// A word together with the alphabet that names its letters. Two sequences
// are compared token by token, so the alphabets may order letters differently.
struct Sequence {
  Alphabet alphabet;
  Word word;

  std::size_t size() const { return word.size(); }
  std::string str() const { return render(alphabet, word); }

  std::string token(std::size_t i) const { return alphabet.name(word.at(i)); }

  Sequence prefix(std::size_t n) const {
    n = std::min(n, word.size());
    return {alphabet, Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(n))};
  }

  std::optional<Letter> letter(std::string_view token) const { return alphabet.find(token); }
};

// First index where the two sequences disagree by token within the common
// length, or nullopt when one is a prefix of the other.
inline std::optional<std::size_t> first_difference(const Sequence& a, const Sequence& b) {
  std::vector<std::optional<Letter>> translate(a.alphabet.size());
  for (Letter x = 0; x < a.alphabet.size(); ++x) translate[x] = b.alphabet.find(a.alphabet.name(x));
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto t = translate[a.word[i]];
    if (!t || *t != b.word[i]) return i;
  }
  return std::nullopt;
}

inline bool same_tokens(const Sequence& a, const Sequence& b) {
  return a.size() == b.size() && !first_difference(a, b);
}

inline Alphabet digit_alphabet(unsigned k) {
  std::vector<std::string> letters;
  for (unsigned d = 0; d < k; ++d) letters.push_back(std::to_string(d));
  return Alphabet(std::move(letters));
}

inline unsigned two_adic_valuation(std::uint64_t n) {
  unsigned v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Characteristic words of integer sets

enum class IntegerSet { Factorials, FibonacciNumbers, PowersOf };

// 1 at position i iff i is in the set, for 0 <= i < n.
inline Sequence characteristic(IntegerSet set, std::size_t n, unsigned base = 2) {
  Sequence s{Alphabet::of_chars("01"), Word(n, 0)};
  auto mark = [&](std::uint64_t i) {
    if (i < n) s.word[i] = 1;
  };
  switch (set) {
    case IntegerSet::Factorials:
      for (std::uint64_t f = 1, k = 1; f < n; f *= ++k) mark(f);
      break;
    case IntegerSet::FibonacciNumbers:
      for (std::uint64_t a = 0, b = 1; a < n; b += a, a = b - a) mark(a);
      break;
    case IntegerSet::PowersOf:
      if (base < 2) throw InvalidArgument("powers_of needs a base of at least 2");
      for (std::uint64_t p = 1; p < n; p *= base) mark(p);
      break;
  }
  return s;
}

// Base-k expansions of 1, 2, 3, ... written one after another.
inline Sequence base_concat(unsigned k, std::size_t n) {
  if (k < 2) throw InvalidArgument("base_concat needs k >= 2");
  Sequence s{digit_alphabet(k), {}};
  s.word.reserve(n);
  std::vector<Letter> digits;
  for (std::uint64_t v = 1; s.word.size() < n; ++v) {
    digits.clear();
    for (std::uint64_t x = v; x > 0; x /= k) digits.push_back(static_cast<Letter>(x % k));
    for (auto it = digits.rbegin(); it != digits.rend() && s.word.size() < n; ++it) s.word.push_back(*it);
  }
  return s;
}

// block(ν₂(1)) block(ν₂(2)) block(ν₂(3)) ..., truncated to n symbols.
using RulerBlock = std::function<std::vector<std::string>(unsigned)>;

inline Sequence ruler_image(const RulerBlock& block, std::size_t n) {
  std::vector<std::string> letters;
  std::unordered_map<std::string, Letter> ids;
  Word w;
  w.reserve(n);
  for (std::uint64_t i = 1; w.size() < n; ++i) {
    for (const auto& tok : block(two_adic_valuation(i))) {
      if (w.size() == n) break;
      auto [it, fresh] = ids.emplace(tok, static_cast<Letter>(letters.size()));
      if (fresh) letters.push_back(tok);
      w.push_back(it->second);
    }
  }
  if (letters.empty()) letters.push_back("0");
  return {Alphabet(std::move(letters)), std::move(w)};
}

enum class ProductFormula {
  // ∏_{n>=1} 0 1^{(ν₂(n)+1)²}
  RulerSquares,
};

inline Sequence product_word(ProductFormula formula, std::size_t n) {
  Sequence s{Alphabet::of_chars("01"), {}};
  s.word.reserve(n);
  switch (formula) {
    case ProductFormula::RulerSquares:
      for (std::uint64_t i = 1; s.word.size() < n; ++i) {
        s.word.push_back(0);
        const std::uint64_t e = two_adic_valuation(i) + 1;
        for (std::uint64_t j = 0; j < e * e && s.word.size() < n; ++j) s.word.push_back(1);
      }
      break;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Real constants and Sturmian words

using boost::multiprecision::cpp_int;

// (p + q·√d) / r with r > 0.
struct QuadraticNumber {
  cpp_int p = 0;
  cpp_int q = 0;
  unsigned d = 0;
  cpp_int r = 1;

  std::string to_string() const {
    std::string s = "(" + p.str();
    if (q != 0) s += (q < 0 ? " - " : " + ") + cpp_int(boost::multiprecision::abs(q)).str() + "*sqrt(" + std::to_string(d) + ")";
    return s + ")/" + r.str();
  }
};

// A constant known through a truncated decimal expansion, e.g. π.
struct DecimalConstant {
  std::string name;
  std::string digits;  // "3.1415..."; the true value lies in [digits, digits + 1ulp)
};

inline DecimalConstant pi_constant() {
  return {"pi", "3.1415926535897932384626433832795028841971693993751058209749445923"};
}

using RealConstant = std::variant<QuadraticNumber, DecimalConstant>;

inline std::string to_string(const RealConstant& c) {
  if (const auto* q = std::get_if<QuadraticNumber>(&c)) return q->to_string();
  return std::get<DecimalConstant>(c).name;
}

namespace detail {

inline cpp_int floor_div(const cpp_int& a, const cpp_int& b) {
  cpp_int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// floor((P + Q·√d) / R), exactly.
inline cpp_int floor_quadratic(const cpp_int& P, const cpp_int& Q, unsigned d, const cpp_int& R) {
  if (R <= 0) throw InvalidArgument("quadratic denominator must be positive");
  const cpp_int radicand = Q * Q * d;
  const cpp_int t = boost::multiprecision::sqrt(radicand);
  if (t * t == radicand) return floor_div(P + (Q < 0 ? -t : t), R);
  // Q·√d lies strictly between two integers, so floor(P + Q·√d) is known.
  const cpp_int whole = Q > 0 ? cpp_int(P + t) : cpp_int(P - t - 1);
  return floor_div(whole, R);
}

inline constexpr unsigned kIntervalDigits = 64;

inline cpp_int pow10(unsigned e) {
  cpp_int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

// [lo, hi] with lo <= value·10^64 <= hi.
inline std::pair<cpp_int, cpp_int> scaled_bounds(const RealConstant& c) {
  const cpp_int scale = pow10(kIntervalDigits);
  if (const auto* q = std::get_if<QuadraticNumber>(&c)) {
    const cpp_int rad = q->q * q->q * q->d * scale * scale;
    const cpp_int root = boost::multiprecision::sqrt(rad);
    const cpp_int base = q->p * scale;
    const cpp_int lo = q->q >= 0 ? cpp_int(base + root) : cpp_int(base - root - 1);
    const cpp_int hi = q->q >= 0 ? cpp_int(base + root + 1) : cpp_int(base - root);
    return {floor_div(lo, q->r), floor_div(hi, q->r) + 1};
  }
  const auto& dc = std::get<DecimalConstant>(c);
  const auto dot = dc.digits.find('.');
  std::string whole = dc.digits.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : dc.digits.substr(dot + 1);
  if (frac.size() > kIntervalDigits) frac.resize(kIntervalDigits);
  const bool negative = !whole.empty() && whole[0] == '-';
  if (negative) throw InvalidArgument("negative decimal constants are not supported");
  const cpp_int truncated = cpp_int(whole + frac) * pow10(kIntervalDigits - static_cast<unsigned>(frac.size()));
  return {truncated, truncated + pow10(kIntervalDigits - static_cast<unsigned>(frac.size()))};
}

}  // namespace detail

// floor(n·α + ρ); exact for quadratic numbers sharing a radicand, otherwise
// decided by interval arithmetic at 64 digits or rejected.
inline cpp_int floor_linear(std::uint64_t n, const RealConstant& alpha, const RealConstant& rho) {
  const auto* qa = std::get_if<QuadraticNumber>(&alpha);
  const auto* qr = std::get_if<QuadraticNumber>(&rho);
  if (qa && qr && (qa->d == qr->d || qa->q == 0 || qr->q == 0)) {
    const unsigned d = qa->q != 0 ? qa->d : qr->d;
    const cpp_int P = n * qa->p * qr->r + qr->p * qa->r;
    const cpp_int Q = n * qa->q * qr->r + qr->q * qa->r;
    return detail::floor_quadratic(P, Q, d, qa->r * qr->r);
  }
  const auto [alo, ahi] = detail::scaled_bounds(alpha);
  const auto [rlo, rhi] = detail::scaled_bounds(rho);
  const cpp_int scale = detail::pow10(detail::kIntervalDigits);
  const cpp_int lo = detail::floor_div(n * alo + rlo, scale);
  const cpp_int hi = detail::floor_div(n * ahi + rhi, scale);
  if (lo != hi)
    throw PrecisionExhausted("floor(" + std::to_string(n) + "*" + to_string(alpha) + " + " + to_string(rho) +
                             ") is ambiguous at 64 digits");
  return lo;
}

// s_i = floor((i+1)α + ρ) − floor(iα + ρ) for 0 <= i < n. Letters are the
// decimal values floor(α) and floor(α)+1.
inline Sequence sturmian(const RealConstant& alpha, const RealConstant& rho, std::size_t n) {
  const cpp_int low = floor_linear(1, alpha, QuadraticNumber{});
  const std::string lo_tok = low.str();
  const std::string hi_tok = cpp_int(low + 1).str();
  Sequence s{Alphabet({lo_tok, hi_tok}), {}};
  s.word.reserve(n);
  cpp_int prev = floor_linear(0, alpha, rho);
  for (std::size_t i = 0; i < n; ++i) {
    cpp_int next = floor_linear(i + 1, alpha, rho);
    const cpp_int diff = next - prev;
    if (diff == low) {
      s.word.push_back(0);
    } else if (diff == low + 1) {
      s.word.push_back(1);
    } else {
      throw InvalidArgument("sturmian: slope must be positive and irrational");
    }
    prev = std::move(next);
  }
  return s;
}

}  // namespace morphic
