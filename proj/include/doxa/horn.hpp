#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doxa/alphabet.hpp"
#include "doxa/formula.hpp"

namespace doxa {

struct HornLiteral {
  std::size_t var;
  bool positive;
  friend auto operator<=>(const HornLiteral&, const HornLiteral&) = default;
};

inline HornLiteral pos(std::size_t var) { return {var, true}; }
inline HornLiteral neg(std::size_t var) { return {var, false}; }

// Disjunction of literals with at most one positive.  Literals are kept
// sorted and deduplicated; the empty clause is falsity.  A clause may pair x
// with ~x: it is then tautological, which is flagged rather than rejected.
class HornClause {
 public:
  HornClause() = default;
  explicit HornClause(std::vector<HornLiteral> literals);

  const std::vector<HornLiteral>& literals() const { return literals_; }
  bool empty() const { return literals_.empty(); }
  bool tautological() const;
  bool contains(HornLiteral lit) const;
  std::optional<std::size_t> head() const;  // the positive variable, if any

  friend auto operator<=>(const HornClause&, const HornClause&) = default;

 private:
  std::vector<HornLiteral> literals_;
};

// Conjunction of Horn clauses over variables 0..var_count-1.  Clauses are
// sorted and deduplicated.  No model enumeration happens anywhere below:
// everything runs on unit propagation and clause surgery, so formulae may
// use far more variables than the enumeration bound.
class HornFormula {
 public:
  HornFormula() = default;
  HornFormula(std::size_t var_count, std::vector<HornClause> clauses);

  std::size_t var_count() const { return var_count_; }
  const std::vector<HornClause>& clauses() const { return clauses_; }
  bool no_clauses() const { return clauses_.empty(); }

  friend bool operator==(const HornFormula&, const HornFormula&) = default;

 private:
  std::size_t var_count_ = 0;
  std::vector<HornClause> clauses_;
};

// Satisfiability by unit propagation, linear in the formula size.
bool horn_unsat(const HornFormula& f);

// f |= x, decided as inconsistency of f with ~x (x lies in the minimal
// model, or f is already inconsistent).
bool horn_entails_var(const HornFormula& f, std::size_t var);

// ~x |= f, which for Horn f is the syntactic test that ~x occurs in every
// clause (tautological clauses aside).
bool negvar_entails_horn(std::size_t var, const HornFormula& f);

// f |= g, clause by clause: f together with the negation of a clause of g
// must be inconsistent.
bool horn_entails(const HornFormula& f, const HornFormula& g);

bool horn_equivalent(const HornFormula& f, const HornFormula& g);

// Every clause contains complementary literals (empty formula included).
bool horn_is_tautological(const HornFormula& f);

// f%x: drop the clauses containing x positively, erase ~x from the rest.
// Leaves f untouched when x occurs nowhere.
HornFormula remove_variable(const HornFormula& f, std::size_t var);

// Does f1 define exactly the complement of f2?  Runs the simplification
// loop: whenever one formula entails x or is entailed by ~x, the dual
// condition must hold on the other formula (otherwise the answer is no) and
// x is removed from both; after the fixpoint only the empty/contradictory
// pairings remain true.  At most one removal per variable, so the loop runs
// at most as many times as there are variables.
bool horn_equiv_negation(const HornFormula& f1, const HornFormula& f2);

struct NegationEquivalenceTrace {
  bool equivalent;
  std::size_t removals;  // loop iterations that erased a variable
};

NegationEquivalenceTrace horn_equiv_negation_traced(const HornFormula& f1,
                                                    const HornFormula& f2);

// Why dropping the first of two lexicographic revisions changes nothing:
// exactly one of four degenerate shapes of s1 relative to s2.
enum class BinaryRedundancyCase {
  None,
  Inconsistent,           // s1 unsatisfiable
  Tautological,           // s1 valid
  EquivalentToSecond,     // s1 == s2
  EquivalentToNegation,   // s1 == ~s2
};

const char* binary_redundancy_case_name(BinaryRedundancyCase c);

BinaryRedundancyCase binary_horn_redundancy_case(const HornFormula& s1,
                                                 const HornFormula& s2);

// True when any of the four cases applies.  Polynomial: no truth tables.
bool binary_horn_redundant(const HornFormula& s1, const HornFormula& s2);

// The same formula as a generic AST, for cross-checking against enumeration.
Formula horn_to_formula(const HornFormula& f, const Alphabet& alphabet);

// --------------------------------------------------------------------------
// Clause file syntax: clauses separated by newlines or ';', literals by '|',
// '~' negates, the token FALSE (alone) is the empty clause.

struct NamedHornClause {
  std::vector<std::pair<std::string, bool>> literals;  // (variable, positive)
  std::size_t line = 0;
};

struct ParsedHorn {
  std::vector<NamedHornClause> clauses;
  std::vector<std::string> variables;  // sorted, distinct
};

ParsedHorn parse_horn_text(std::string_view text);

// Resolves names against an alphabet (usually the union of two files).
HornFormula bind_horn(const ParsedHorn& parsed, const Alphabet& alphabet);

}  // namespace doxa
