#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doxa/alphabet.hpp"
#include "doxa/formula.hpp"
#include "doxa/horn.hpp"
#include "doxa/model.hpp"
#include "doxa/revision.hpp"

namespace doxa {

// One parsed scenario file: an alphabet, an initial state, revision steps
// and queries.  Queries are answered against the state after all steps, in
// file order, one output line each.
struct Scenario {
  enum class InitialKind { Flat, FromFormula, FromClasses };

  struct Step {
    RevisionStep step;
    std::size_t line;
  };

  struct Query {
    enum class Kind { State, Compare, Redundant, RedundantFirstLex, LeqLex };
    Kind kind;
    std::size_t line;
    std::optional<Model> i;  // Compare, LeqLex
    std::optional<Model> j;
    std::size_t index = 0;   // Redundant, zero-based
  };

  Alphabet alphabet;
  InitialKind initial_kind = InitialKind::Flat;
  std::vector<Formula> initial_formulas;
  std::size_t initial_line = 0;
  std::vector<Step> steps;
  std::vector<Query> queries;
};

// Line-oriented syntax, '#' starts a comment:
//   vars <name> ...
//   state flat | state formula <f> | state classes <f> ; <f> ; ...
//   revise <op> <formula>
//   query state
//   query compare <model> <model>
//   query redundant <k>            (one-based step index)
//   query redundant-first-lex
//   query leq-lex <model> <model>
// Throws ParseError; anything else wrong with the input is left to run time.
Scenario parse_scenario(std::string_view text);

// Executes the scenario and returns the output, one line per query.  Throws
// doxa errors for semantic failures (inconsistent payloads, bound overruns,
// ill-formed class lists, queries that need a stricter sequence shape).
std::string run_scenario(const Scenario& scenario,
                         std::size_t enum_bound = kDefaultEnumerationBound);

// Support for checking two clause files against each other.  Both formulae
// are read over the union of their variables.
struct HornCheck {
  bool result;
  BinaryRedundancyCase which;  // None in neg-equiv mode or when result is false
};

HornCheck horn_check_redundant(std::string_view text1, std::string_view text2);
HornCheck horn_check_neg_equiv(std::string_view text1, std::string_view text2);

}  // namespace doxa
