#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "doxa/alphabet.hpp"
#include "doxa/formula.hpp"
#include "doxa/revision.hpp"
#include "doxa/state.hpp"

namespace doxa {

// Enumerating sign selections is exponential; sequences longer than this are
// refused unless the caller raises the limit explicitly.
inline constexpr std::size_t kDefaultCombinationLimit = 20;

// The one-formula order: i no less plausible than j after learning a alone.
bool formula_leq(const Formula& a, const Model& i, const Model& j);

// i <= j in the state reached from the flat state by revising
// lexicographically with s in order, decided per assignment pair without
// building the state.
bool lex_seq_leq(std::span<const Formula> s, const Model& i, const Model& j);

// Same, but each step may be lexicographic or very-radical.  Throws
// UnsupportedOperator for any other operator.
bool mixed_lex_vrad_leq(std::span<const RevisionStep> s, const Model& i,
                        const Model& j);

// One sign per formula.  When enumerating all selectors over s[1..m], the
// selector is read as a binary counter whose least significant bit is the
// sign of s[1] (of s[0] when a whole sequence is combined).
using QSelector = std::vector<bool>;

// The conjunction that fixes each formula's sign: formulae[k] when
// selector[k] is true, its negation otherwise.  Empty input gives "true".
Formula q_combination(std::span<const Formula> formulae, const QSelector& selector);

// Whether dropping s[0] leaves the lexicographic revision of the flat state
// unchanged: every sign combination of the later formulae must settle s[0]
// one way or the other.
bool redundant_first_lex_flat(std::span<const Formula> s, const Alphabet& alphabet,
                              std::size_t enum_bound = kDefaultEnumerationBound,
                              std::size_t combination_limit = kDefaultCombinationLimit);

// Refinement: when the first step is droppable, s[0] is equivalent to the
// disjunction of the returned combinations (those that entail it); nullopt
// when it is not droppable.  The empty set is a valid witness (s[0]
// unsatisfiable).
std::optional<std::vector<QSelector>> redundant_first_as_disjunction(
    std::span<const Formula> s, const Alphabet& alphabet,
    std::size_t enum_bound = kDefaultEnumerationBound,
    std::size_t combination_limit = kDefaultCombinationLimit);

// Two-step special case: the first of [s1, s2] is droppable exactly when s1
// is unsatisfiable, valid, equivalent to s2, or equivalent to its negation.
bool redundant_two_lex_flat(const Formula& s1, const Formula& s2,
                            const Alphabet& alphabet,
                            std::size_t enum_bound = kDefaultEnumerationBound);

// Ground truth for any operator mix: compare the states built with and
// without step `index` (zero-based).
bool redundant_general(const DoxasticState& initial, const RevisionSequence& steps,
                       std::size_t index, const Alphabet& alphabet,
                       std::size_t enum_bound = kDefaultEnumerationBound);

}  // namespace doxa
