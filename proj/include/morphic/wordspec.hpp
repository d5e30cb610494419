#pragma once

// Declarative word constructions and their deterministic materialization.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "morphic/core.hpp"
#include "morphic/generate.hpp"
#include "morphic/words.hpp"

namespace morphic {

struct WordSpec;
using WordSpecPtr = std::shared_ptr<const WordSpec>;

struct MorphicFixedPoint {
  Morphism morphism;
  Letter seed = 0;
  std::optional<Coding> coding;
};

// Overwrites the first |replacement| symbols of the base word.
struct PrefixPatch {
  WordSpecPtr base;
  std::vector<std::string> replacement;
};

struct Characteristic {
  IntegerSet set = IntegerSet::Factorials;
  unsigned base = 2;  // only for IntegerSet::PowersOf
};

struct BaseConcat {
  unsigned k = 2;
};

struct Sturmian {
  RealConstant alpha;
  RealConstant rho;
};

struct RulerImage {
  std::string description;
  RulerBlock block;
};

// Drops the first k symbols of the base word.
struct Shift {
  WordSpecPtr base;
  std::size_t k = 0;
};

struct Product {
  ProductFormula formula = ProductFormula::RulerSquares;
};

struct WordSpec {
  std::variant<MorphicFixedPoint, PrefixPatch, Characteristic, BaseConcat, Sturmian, RulerImage, Shift, Product> node;
};

template <typename Node>
WordSpecPtr make_spec(Node node) {
  return std::make_shared<const WordSpec>(WordSpec{std::move(node)});
}

inline WordSpecPtr fixed_point_spec(Morphism m, std::string_view seed, std::optional<Coding> coding = std::nullopt) {
  const Letter s = m.alphabet().id(seed);
  return make_spec(MorphicFixedPoint{std::move(m), s, std::move(coding)});
}

namespace detail {

inline Sequence patch_prefix(Sequence base, const std::vector<std::string>& replacement) {
  std::vector<std::string> letters = base.alphabet.letters();
  for (const auto& tok : replacement)
    if (!base.alphabet.contains(tok) && std::find(letters.begin(), letters.end(), tok) == letters.end())
      letters.push_back(tok);
  Alphabet alphabet(letters);
  for (std::size_t i = 0; i < replacement.size() && i < base.word.size(); ++i)
    base.word[i] = alphabet.id(replacement[i]);
  return {std::move(alphabet), std::move(base.word)};
}

}  // namespace detail

// Exact first n symbols of the construction.
inline Sequence materialize(const WordSpec& spec, std::size_t n, std::size_t budget = kDefaultPrefixBudget) {
  if (n > budget) throw BudgetExceeded(n, budget);
  return std::visit(
      [&](const auto& node) -> Sequence {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, MorphicFixedPoint>) {
          WordStream stream(node.morphism, node.seed, node.coding);
          return {stream.alphabet(), stream.prefix(n, budget)};
        } else if constexpr (std::is_same_v<T, PrefixPatch>) {
          return detail::patch_prefix(materialize(*node.base, n, budget), node.replacement);
        } else if constexpr (std::is_same_v<T, Characteristic>) {
          return characteristic(node.set, n, node.base);
        } else if constexpr (std::is_same_v<T, BaseConcat>) {
          return base_concat(node.k, n);
        } else if constexpr (std::is_same_v<T, Sturmian>) {
          return sturmian(node.alpha, node.rho, n);
        } else if constexpr (std::is_same_v<T, RulerImage>) {
          return ruler_image(node.block, n);
        } else if constexpr (std::is_same_v<T, Shift>) {
          if (n + node.k > budget) throw BudgetExceeded(n + node.k, budget);
          Sequence base = materialize(*node.base, n + node.k, budget);
          base.word.erase(base.word.begin(), base.word.begin() + static_cast<std::ptrdiff_t>(node.k));
          return base;
        } else {
          return product_word(node.formula, n);
        }
      },
      spec.node);
}

inline std::string morphism_table(const Morphism& m) {
  std::string s;
  for (Letter a = 0; a < m.size(); ++a) {
    if (a) s += ", ";
    s += m.alphabet().name(a) + "->" + render(m.alphabet(), m.image(a));
  }
  return s;
}

inline std::string describe(const WordSpec& spec) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, MorphicFixedPoint>) {
          std::string s = "fixed point of {" + morphism_table(node.morphism) + "} from " +
                          node.morphism.alphabet().name(node.seed);
          if (node.coding) {
            s += ", coded by {";
            for (Letter a = 0; a < node.coding->source().size(); ++a)
              s += (a ? ", " : "") + node.coding->source().name(a) + "->" +
                   node.coding->target().name((*node.coding)(a));
            s += "}";
          }
          return s;
        } else if constexpr (std::is_same_v<T, PrefixPatch>) {
          std::string r;
          for (const auto& t : node.replacement) r += t;
          return "prefix of (" + describe(*node.base) + ") overwritten with " + r;
        } else if constexpr (std::is_same_v<T, Characteristic>) {
          switch (node.set) {
            case IntegerSet::Factorials: return "characteristic word of the factorials";
            case IntegerSet::FibonacciNumbers: return "characteristic word of the Fibonacci numbers";
            case IntegerSet::PowersOf: return "characteristic word of the powers of " + std::to_string(node.base);
          }
          return "characteristic word";
        } else if constexpr (std::is_same_v<T, BaseConcat>) {
          return "concatenated base-" + std::to_string(node.k) + " expansions of 1, 2, 3, ...";
        } else if constexpr (std::is_same_v<T, Sturmian>) {
          return "Sturmian word, slope " + to_string(node.alpha) + ", intercept " + to_string(node.rho);
        } else if constexpr (std::is_same_v<T, RulerImage>) {
          return "ruler sequence under " + node.description;
        } else if constexpr (std::is_same_v<T, Shift>) {
          return "(" + describe(*node.base) + ") shifted by " + std::to_string(node.k);
        } else {
          return "product of 0 1^((v2(n)+1)^2) over n >= 1";
        }
      },
      spec.node);
}

}  // namespace morphic
