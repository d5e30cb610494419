#pragma once

// The ten-property lattice of morphic words: implication closure,
// contradiction detection, the 20 consistent classes and their labels.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morphic/error.hpp"

namespace morphic::taxonomy {

inline constexpr std::size_t kPropertyCount = 10;

enum class Property : std::uint8_t { P1, P2, P3, P4, P5, P6, P7, P8, P9, P10 };

inline constexpr std::array<std::string_view, kPropertyCount> kPropertyNames = {
    "pure morphic",
    "morphic",
    "pure uniform morphic",
    "uniform morphic",
    "pure primitive morphic",
    "primitive morphic",
    "pure uniform primitive morphic",
    "uniform primitive morphic",
    "uniformly recurrent",
    "recurrent",
};

inline constexpr std::size_t index(Property p) { return static_cast<std::size_t>(p); }

inline std::string property_tag(std::size_t i) { return "P" + std::to_string(i + 1); }

inline std::optional<Property> parse_property(std::string_view tag) {
  for (std::size_t i = 0; i < kPropertyCount; ++i)
    if (tag == property_tag(i)) return static_cast<Property>(i);
  return std::nullopt;
}

enum class Truth : std::uint8_t { Unknown, True, False };

class PropertyAssignment {
 public:
  PropertyAssignment() { slots_.fill(Truth::Unknown); }

  PropertyAssignment(std::initializer_list<std::pair<Property, bool>> determined) : PropertyAssignment() {
    for (auto [p, v] : determined) set(p, v);
  }

  // Total assignment from a 10-bit mask; bit i is P(i+1).
  static PropertyAssignment from_mask(std::uint32_t mask) {
    PropertyAssignment a;
    for (std::size_t i = 0; i < kPropertyCount; ++i) a.slots_[i] = (mask >> i) & 1U ? Truth::True : Truth::False;
    return a;
  }

  Truth operator[](Property p) const { return slots_[index(p)]; }
  Truth at(std::size_t i) const { return slots_.at(i); }
  void set(Property p, bool v) { slots_[index(p)] = v ? Truth::True : Truth::False; }
  void set(std::size_t i, Truth t) { slots_.at(i) = t; }

  bool is_true(Property p) const { return (*this)[p] == Truth::True; }
  bool is_false(Property p) const { return (*this)[p] == Truth::False; }

  bool total() const {
    for (Truth t : slots_)
      if (t == Truth::Unknown) return false;
    return true;
  }

  std::size_t determined() const {
    std::size_t n = 0;
    for (Truth t : slots_) n += t != Truth::Unknown;
    return n;
  }

  // True when every determined slot of `other` agrees with this one.
  bool agrees_with(const PropertyAssignment& other) const {
    for (std::size_t i = 0; i < kPropertyCount; ++i)
      if (other.slots_[i] != Truth::Unknown && slots_[i] != Truth::Unknown && other.slots_[i] != slots_[i])
        return false;
    return true;
  }

  // True when this assignment determines every slot `other` determines, the same way.
  bool refines(const PropertyAssignment& other) const {
    for (std::size_t i = 0; i < kPropertyCount; ++i)
      if (other.slots_[i] != Truth::Unknown && other.slots_[i] != slots_[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < kPropertyCount; ++i) {
      if (slots_[i] == Truth::Unknown) continue;
      if (!s.empty()) s += ',';
      s += property_tag(i) + (slots_[i] == Truth::True ? "=true" : "=false");
    }
    return s.empty() ? "{}" : s;
  }

  friend bool operator==(const PropertyAssignment&, const PropertyAssignment&) = default;

 private:
  std::array<Truth, kPropertyCount> slots_{};
};

struct ImplicationRule {
  std::vector<Property> antecedents;
  Property consequent;
  std::string provenance;
};

inline const std::vector<ImplicationRule>& rules() {
  using P = Property;
  static const std::vector<ImplicationRule> kRules = [] {
    std::vector<ImplicationRule> r;
    auto trivial = [&](P from, std::initializer_list<P> to) {
      for (P c : to) r.push_back({{from}, c, "definition"});
    };
    trivial(P::P1, {P::P2});
    trivial(P::P3, {P::P1, P::P2, P::P4});
    trivial(P::P4, {P::P2});
    trivial(P::P5, {P::P1, P::P2, P::P6});
    trivial(P::P6, {P::P2});
    trivial(P::P7, {P::P1, P::P2, P::P3, P::P4, P::P5, P::P6, P::P8});
    trivial(P::P8, {P::P2, P::P4, P::P6});
    trivial(P::P9, {P::P10});
    r.push_back({{P::P6}, P::P9, "Cobham: primitive morphic words are uniformly recurrent"});
    r.push_back({{P::P6, P::P4}, P::P8, "Cobham: uniformly recurrent uniform morphic words are uniform primitive morphic"});
    r.push_back({{P::P3, P::P9}, P::P7, "pure uniform morphic and uniformly recurrent implies pure uniform primitive morphic"});
    r.push_back({{P::P2, P::P9}, P::P6, "Durand: uniformly recurrent morphic words are primitive morphic"});
    return r;
  }();
  return kRules;
}

struct Contradiction {
  Property slot;
  const ImplicationRule* rule;

  std::string describe() const {
    std::string s = "contradiction on " + property_tag(index(slot)) + " via rule {";
    for (std::size_t i = 0; i < rule->antecedents.size(); ++i)
      s += (i ? "," : "") + property_tag(index(rule->antecedents[i]));
    return s + "} => " + property_tag(index(rule->consequent)) + " (" + rule->provenance + ")";
  }
};

struct ClosureResult {
  PropertyAssignment assignment;
  std::optional<Contradiction> contradiction;

  bool ok() const { return !contradiction.has_value(); }
};

// Least fixpoint under forward chaining and contrapositive chaining.
inline ClosureResult closure(PropertyAssignment a) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& rule : rules()) {
      std::size_t true_count = 0;
      std::optional<Property> open;
      bool blocked = false;  // some antecedent is false
      std::size_t unknown_count = 0;
      for (Property p : rule.antecedents) {
        if (a.is_true(p)) {
          ++true_count;
        } else if (a.is_false(p)) {
          blocked = true;
        } else {
          ++unknown_count;
          open = p;
        }
      }
      if (blocked) continue;
      const bool all_true = true_count == rule.antecedents.size();
      if (all_true) {
        if (a.is_false(rule.consequent)) return {a, Contradiction{rule.consequent, &rule}};
        if (!a.is_true(rule.consequent)) {
          a.set(rule.consequent, true);
          changed = true;
        }
      } else if (unknown_count == 1 && a.is_false(rule.consequent)) {
        a.set(*open, false);
        changed = true;
      }
    }
  }
  return {a, std::nullopt};
}

inline bool satisfies_all_rules(const PropertyAssignment& a) {
  for (const auto& rule : rules()) {
    bool all = true;
    for (Property p : rule.antecedents) all = all && a.is_true(p);
    if (all && !a.is_true(rule.consequent)) return false;
  }
  return true;
}

// Brute force over all 2^10 total assignments.
inline std::vector<PropertyAssignment> enumerate_classes() {
  std::vector<PropertyAssignment> out;
  for (std::uint32_t mask = 0; mask < (1U << kPropertyCount); ++mask) {
    auto a = PropertyAssignment::from_mask(mask);
    if (satisfies_all_rules(a)) out.push_back(a);
  }
  return out;
}

// One clause per class: the slots the class description fixes.
struct ClassClause {
  char label;
  std::string_view description;
  PropertyAssignment determined;
};

inline const std::vector<ClassClause>& class_clauses() {
  using P = Property;
  static const std::vector<ClassClause> kClauses = {
      {'a', "neither morphic nor recurrent", {{P::P2, false}, {P::P10, false}}},
      {'b', "recurrent; neither morphic nor uniformly recurrent", {{P::P10, true}, {P::P2, false}, {P::P9, false}}},
      {'c', "uniformly recurrent; not morphic", {{P::P9, true}, {P::P2, false}}},
      {'d', "morphic; neither pure morphic, uniform morphic, primitive morphic, nor recurrent",
       {{P::P2, true}, {P::P1, false}, {P::P4, false}, {P::P6, false}, {P::P10, false}}},
      {'e', "morphic and recurrent; neither pure morphic, uniform morphic, primitive morphic, nor uniformly recurrent",
       {{P::P2, true}, {P::P10, true}, {P::P1, false}, {P::P4, false}, {P::P6, false}, {P::P9, false}}},
      {'f', "primitive morphic; neither pure morphic nor uniform morphic",
       {{P::P6, true}, {P::P1, false}, {P::P4, false}}},
      {'g', "uniform morphic; neither pure morphic, primitive morphic, nor recurrent",
       {{P::P4, true}, {P::P1, false}, {P::P6, false}, {P::P10, false}}},
      {'h', "uniform morphic and recurrent; neither pure morphic nor primitive morphic",
       {{P::P4, true}, {P::P10, true}, {P::P1, false}, {P::P6, false}}},
      {'i', "uniform primitive morphic; not pure morphic", {{P::P8, true}, {P::P1, false}}},
      {'j', "pure morphic; neither uniform morphic, primitive morphic, nor recurrent",
       {{P::P1, true}, {P::P4, false}, {P::P6, false}, {P::P10, false}}},
      {'k', "pure morphic and recurrent; neither uniform morphic, primitive morphic, nor uniformly recurrent",
       {{P::P1, true}, {P::P10, true}, {P::P4, false}, {P::P6, false}, {P::P9, false}}},
      {'l', "pure morphic and primitive morphic; neither uniform morphic nor pure primitive morphic",
       {{P::P1, true}, {P::P6, true}, {P::P4, false}, {P::P5, false}}},
      {'m', "pure primitive morphic; not uniform morphic", {{P::P5, true}, {P::P4, false}}},
      {'n', "pure morphic and uniform morphic; neither pure uniform morphic, primitive morphic, nor recurrent",
       {{P::P1, true}, {P::P4, true}, {P::P3, false}, {P::P6, false}, {P::P10, false}}},
      {'o', "pure morphic, uniform morphic and recurrent; neither pure uniform morphic nor primitive morphic",
       {{P::P1, true}, {P::P4, true}, {P::P10, true}, {P::P3, false}, {P::P6, false}}},
      {'p', "pure morphic and uniform primitive morphic; neither pure uniform morphic nor pure primitive morphic",
       {{P::P1, true}, {P::P8, true}, {P::P3, false}, {P::P5, false}}},
      {'q', "pure primitive morphic and uniform primitive morphic; not pure uniform morphic",
       {{P::P5, true}, {P::P8, true}, {P::P3, false}}},
      {'r', "pure uniform morphic; neither primitive morphic nor recurrent",
       {{P::P3, true}, {P::P6, false}, {P::P10, false}}},
      {'s', "pure uniform morphic and recurrent; not primitive morphic",
       {{P::P3, true}, {P::P10, true}, {P::P6, false}}},
      {'t', "pure uniform primitive morphic", {{P::P7, true}}},
  };
  return kClauses;
}

// The total, rule-consistent assignment a class clause closes to.
inline PropertyAssignment class_assignment(char label) {
  for (const auto& clause : class_clauses()) {
    if (clause.label != label) continue;
    auto closed = closure(clause.determined);
    if (!closed.ok() || !closed.assignment.total())
      throw Error(std::string("class clause (") + label + ") does not close to a total assignment");
    return closed.assignment;
  }
  throw InvalidArgument(std::string("unknown class label '") + label + "'");
}

inline char class_label(const PropertyAssignment& a) {
  if (!a.total()) throw InvalidArgument("class_label needs a total assignment");
  if (!satisfies_all_rules(a)) throw InvalidArgument("class_label: assignment violates an implication rule");
  for (const auto& clause : class_clauses())
    if (class_assignment(clause.label) == a) return clause.label;
  throw Error("consistent assignment matches no class clause: " + a.to_string());
}

struct EvidenceResult {
  ClosureResult closed;
  std::vector<char> labels;
};

// Closes the evidence and lists every class consistent with it.
inline EvidenceResult classify_evidence(const PropertyAssignment& evidence) {
  EvidenceResult r{closure(evidence), {}};
  if (!r.closed.ok()) return r;
  for (const auto& clause : class_clauses())
    if (class_assignment(clause.label).refines(r.closed.assignment)) r.labels.push_back(clause.label);
  return r;
}

}  // namespace morphic::taxonomy
