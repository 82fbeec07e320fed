#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "doxa/alphabet.hpp"
#include "doxa/formula.hpp"
#include "doxa/state.hpp"

namespace doxa {

// The eight revision operators.  Every operator keeps the full partition
// structure of the prior state in some form; they differ in how much of the
// old order survives inside and outside the new information.
enum class Operator {
  Lexicographic,   // lex
  Natural,         // nat
  Severe,          // sev
  ModerateSevere,  // msev
  DeepSevere,      // dsev
  Restrained,      // res
  VeryRadical,     // vrad
  Full,            // full
};

const char* operator_name(Operator op);
std::optional<Operator> operator_from_name(std::string_view name);

struct RevisionStep {
  Operator op;
  Formula payload;
};

using RevisionSequence = std::vector<RevisionStep>;

// One revision by the models of the payload.  Throws InconsistentRevision
// when a is empty; every operator insists on consistent new information.
DoxasticState revise(const DoxasticState& state, Operator op, const ModelSet& a);

DoxasticState revise(const DoxasticState& state, Operator op, const Formula& payload,
                     const Alphabet& alphabet,
                     std::size_t enum_bound = kDefaultEnumerationBound);

// Left-to-right application.  An inconsistent payload raises
// InconsistentRevision carrying the zero-based index of the failing step.
DoxasticState apply_sequence(const DoxasticState& state, const RevisionSequence& steps,
                             const Alphabet& alphabet,
                             std::size_t enum_bound = kDefaultEnumerationBound);

}  // namespace doxa
