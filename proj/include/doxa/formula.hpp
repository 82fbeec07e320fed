#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "doxa/alphabet.hpp"
#include "doxa/model.hpp"

namespace doxa {

// Immutable propositional formula.  Nodes are shared, so copies are cheap.
// Conjunction and disjunction are n-ary; the builders collapse the 0- and
// 1-child cases (empty conjunction is "true", empty disjunction "false").
class Formula {
 public:
  enum class Kind {
    Constant,
    Variable,
    Negation,
    Conjunction,
    Disjunction,
    Implication,
    Equivalence,
  };

  static Formula constant(bool value);
  static Formula variable(std::size_t index);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> children);
  static Formula disjunction(std::vector<Formula> children);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  Kind kind() const;
  bool constant_value() const;        // Constant only
  std::size_t variable_index() const; // Variable only
  const std::vector<Formula>& children() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Truth of f under a total assignment.
bool evaluate(const Formula& f, const Model& m);

// All models of f over the alphabet, ascending.  Throws
// EnumerationBoundExceeded when the alphabet is larger than the bound.
ModelSet models(const Formula& f, const Alphabet& alphabet,
                std::size_t enum_bound = kDefaultEnumerationBound);

bool is_valid(const Formula& f, const Alphabet& alphabet,
              std::size_t enum_bound = kDefaultEnumerationBound);
bool is_unsat(const Formula& f, const Alphabet& alphabet,
              std::size_t enum_bound = kDefaultEnumerationBound);
bool entails(const Formula& f, const Formula& g, const Alphabet& alphabet,
             std::size_t enum_bound = kDefaultEnumerationBound);
bool equivalent(const Formula& f, const Formula& g, const Alphabet& alphabet,
                std::size_t enum_bound = kDefaultEnumerationBound);

// Connective syntax: ~ & | -> <->, tightest first, -> right-associative,
// <-> left-associative, plus "true", "false" and parentheses.
Formula parse_formula(std::string_view text, const Alphabet& alphabet);

// Minimal parentheses; reparsing yields the same tree up to flattening of
// nested conjunctions/disjunctions.
std::string to_string(const Formula& f, const Alphabet& alphabet);

// Distinct identifiers lexed from a formula source, sorted, keywords
// excluded.  Purely lexical: the text need not parse.
std::vector<std::string> collect_identifiers(std::string_view text);

// Sorted indices of the variables that occur in f.
std::vector<std::size_t> variables_of(const Formula& f);

// The same formula over another alphabet, matching variables by name.
Formula reindex(const Formula& f, const Alphabet& from, const Alphabet& to);

}  // namespace doxa
