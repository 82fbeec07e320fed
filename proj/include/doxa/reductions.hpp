#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "doxa/alphabet.hpp"
#include "doxa/formula.hpp"
#include "doxa/model.hpp"
#include "doxa/revision.hpp"
#include "doxa/state.hpp"

namespace doxa {

// A ready-to-run instance tying a revision sequence to the single question
// whose answer tracks a satisfiability property of the injected formulae.
// The gadget variables a, b, c are reserved: injected formulae must use
// other names (and, when there are two, must not share any).
struct ReductionInstance {
  std::string name;                 // which construction produced it
  std::string expected;             // the satisfiability condition it tracks
  Alphabet alphabet;                // gadgets first, injected variables after
  std::vector<Formula> initial_classes;  // empty means the flat state
  DoxasticState initial;
  RevisionSequence steps;

  struct RedundancyQuery {
    std::size_t index;  // zero-based step
  };
  struct ComparisonQuery {
    Model i;
    Model j;
  };
  std::variant<RedundancyQuery, ComparisonQuery> query;
};

// Three-class initial state, one natural then one severe revision; dropping
// the natural step is harmless iff f is satisfiable and g is not.
ReductionInstance gen_hetero_hard(const std::string& f, const std::string& g);

// Flat start, two lexicographic steps then one deep-severe step; dropping
// the first step is harmless iff f is satisfiable.
ReductionInstance gen_hetero_flat(const std::string& f);

// Flat start, three revisions under one of nat/sev/res; {b} ends up no less
// plausible than {a} iff f is unsatisfiable and g is satisfiable.
ReductionInstance gen_compare_nsr(const std::string& f, const std::string& g,
                                  Operator op);

// Flat start, two full-meet revisions; {a} ends up no less plausible than
// {b} iff f is satisfiable.
ReductionInstance gen_compare_full(const std::string& f);

// Flat start, two moderate-severe revisions; {} ends up no less plausible
// than {a} iff f is unsatisfiable.
ReductionInstance gen_compare_msev(const std::string& f);

// Flat start, two deep-severe revisions; {} ends up no less plausible than
// {a} iff f is satisfiable.
ReductionInstance gen_compare_dsev(const std::string& f);

// The instance as a runnable scenario file, query included.
std::string to_scenario(const ReductionInstance& instance);

}  // namespace doxa
