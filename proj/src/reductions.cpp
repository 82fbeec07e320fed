#include "doxa/reductions.hpp"

#include <algorithm>
#include <set>

#include "doxa/error.hpp"

namespace doxa {

namespace {

// Alphabet of one construction: the gadget names it uses, then the injected
// variables in sorted order.  Injected formulae may not touch any gadget
// name (all three are reserved even when unused) nor each other's variables.
Alphabet build_alphabet(const std::vector<std::string>& gadgets,
                        const std::string& f, const std::string& g = "") {
  const std::vector<std::string> f_vars = collect_identifiers(f);
  const std::vector<std::string> g_vars = collect_identifiers(g);
  for (const char* reserved : {"a", "b", "c"}) {
    for (const auto& vars : {f_vars, g_vars}) {
      if (std::binary_search(vars.begin(), vars.end(), std::string(reserved)))
        throw AlphabetOverlap(std::string("injected formula uses the reserved variable '") +
                              reserved + "'");
    }
  }
  for (const std::string& v : f_vars) {
    if (std::binary_search(g_vars.begin(), g_vars.end(), v))
      throw AlphabetOverlap("variable '" + v + "' appears in both injected formulae");
  }
  std::vector<std::string> names = gadgets;
  std::set<std::string> injected(f_vars.begin(), f_vars.end());
  injected.insert(g_vars.begin(), g_vars.end());
  names.insert(names.end(), injected.begin(), injected.end());
  return Alphabet(names);
}

Model named_model(const Alphabet& alphabet, const std::vector<std::string>& true_vars) {
  std::uint32_t bits = 0;
  for (const std::string& name : true_vars) bits |= std::uint32_t{1} << *alphabet.index(name);
  return Model(bits, static_cast<int>(alphabet.size()));
}

DoxasticState state_from(const Alphabet& alphabet, const std::vector<Formula>& classes) {
  if (classes.empty()) return DoxasticState::flat(alphabet);
  std::vector<ModelSet> sets;
  sets.reserve(classes.size());
  for (const Formula& f : classes) sets.push_back(models(f, alphabet));
  return DoxasticState::from_classes(static_cast<int>(alphabet.size()), std::move(sets));
}

}  // namespace

ReductionInstance gen_hetero_hard(const std::string& f, const std::string& g) {
  ReductionInstance out;
  out.name = "hetero-hard";
  out.expected = "redundant iff satisfiable(f) and unsatisfiable(g)";
  out.alphabet = build_alphabet({"a", "b", "c"}, f, g);
  out.initial_classes = {
      parse_formula("a", out.alphabet),
      parse_formula("~a & b", out.alphabet),
      parse_formula("~a & ~b", out.alphabet),
  };
  out.initial = state_from(out.alphabet, out.initial_classes);
  out.steps = {
      {Operator::Natural,
       parse_formula("(~a & b & c & (" + f + ")) | (~a & ~b & c)", out.alphabet)},
      {Operator::Severe,
       parse_formula("(a & ~c & (" + g + ")) | (~a & b & ~c)", out.alphabet)},
  };
  out.query = ReductionInstance::RedundancyQuery{0};
  return out;
}

ReductionInstance gen_hetero_flat(const std::string& f) {
  ReductionInstance out;
  out.name = "hetero-flat";
  out.expected = "redundant iff satisfiable(f)";
  out.alphabet = build_alphabet({"a", "b", "c"}, f);
  out.initial = DoxasticState::flat(out.alphabet);
  out.steps = {
      {Operator::Lexicographic, parse_formula("a | b", out.alphabet)},
      {Operator::Lexicographic, parse_formula("a", out.alphabet)},
      {Operator::DeepSevere,
       parse_formula("a | (~a & ~b & c & (" + f + "))", out.alphabet)},
  };
  out.query = ReductionInstance::RedundancyQuery{0};
  return out;
}

ReductionInstance gen_compare_nsr(const std::string& f, const std::string& g,
                                  Operator op) {
  if (op != Operator::Natural && op != Operator::Severe && op != Operator::Restrained)
    throw UnsupportedOperator(
        std::string("this construction works for nat, sev and res, got ") +
        operator_name(op));
  ReductionInstance out;
  out.name = std::string("nsr-") + operator_name(op);
  out.expected = "{b} no less plausible than {a} iff unsatisfiable(f) and satisfiable(g)";
  out.alphabet = build_alphabet({"a", "b"}, f, g);
  out.initial = DoxasticState::flat(out.alphabet);
  out.steps = {
      {op, parse_formula("a", out.alphabet)},
      {op, parse_formula("~a | (a & b & (" + f + "))", out.alphabet)},
      {op, parse_formula("a | (~a & ~b & (" + g + "))", out.alphabet)},
  };
  out.query = ReductionInstance::ComparisonQuery{named_model(out.alphabet, {"b"}),
                                                 named_model(out.alphabet, {"a"})};
  return out;
}

ReductionInstance gen_compare_full(const std::string& f) {
  ReductionInstance out;
  out.name = "full";
  out.expected = "{a} no less plausible than {b} iff satisfiable(f)";
  out.alphabet = build_alphabet({"a", "b"}, f);
  out.initial = DoxasticState::flat(out.alphabet);
  out.steps = {
      {Operator::Full, parse_formula("a", out.alphabet)},
      {Operator::Full, parse_formula("~a | (a & b & (" + f + "))", out.alphabet)},
  };
  out.query = ReductionInstance::ComparisonQuery{named_model(out.alphabet, {"a"}),
                                                 named_model(out.alphabet, {"b"})};
  return out;
}

ReductionInstance gen_compare_msev(const std::string& f) {
  ReductionInstance out;
  out.name = "msev";
  out.expected = "{} no less plausible than {a} iff unsatisfiable(f)";
  out.alphabet = build_alphabet({"a", "b"}, f);
  out.initial = DoxasticState::flat(out.alphabet);
  out.steps = {
      {Operator::ModerateSevere, parse_formula("a", out.alphabet)},
      {Operator::ModerateSevere, parse_formula("b & (a -> (" + f + "))", out.alphabet)},
  };
  out.query = ReductionInstance::ComparisonQuery{named_model(out.alphabet, {}),
                                                 named_model(out.alphabet, {"a"})};
  return out;
}

ReductionInstance gen_compare_dsev(const std::string& f) {
  ReductionInstance out;
  out.name = "dsev";
  out.expected = "{} no less plausible than {a} iff satisfiable(f)";
  out.alphabet = build_alphabet({"a", "b"}, f);
  out.initial = DoxasticState::flat(out.alphabet);
  out.steps = {
      {Operator::DeepSevere, parse_formula("a", out.alphabet)},
      {Operator::DeepSevere, parse_formula("b & (~a -> (" + f + "))", out.alphabet)},
  };
  out.query = ReductionInstance::ComparisonQuery{named_model(out.alphabet, {}),
                                                 named_model(out.alphabet, {"a"})};
  return out;
}

std::string to_scenario(const ReductionInstance& instance) {
  std::string out;
  out += "# reduction: " + instance.name + "\n";
  out += "# expected: " + instance.expected + "\n";
  out += "vars";
  for (const std::string& name : instance.alphabet.names()) out += " " + name;
  out += "\n";
  if (instance.initial_classes.empty()) {
    out += "state flat\n";
  } else {
    out += "state classes";
    for (std::size_t i = 0; i < instance.initial_classes.size(); ++i) {
      out += i == 0 ? " " : " ; ";
      out += to_string(instance.initial_classes[i], instance.alphabet);
    }
    out += "\n";
  }
  for (const RevisionStep& step : instance.steps) {
    out += std::string("revise ") + operator_name(step.op) + " " +
           to_string(step.payload, instance.alphabet) + "\n";
  }
  if (const auto* r = std::get_if<ReductionInstance::RedundancyQuery>(&instance.query)) {
    out += "query redundant " + std::to_string(r->index + 1) + "\n";
  } else {
    const auto& c = std::get<ReductionInstance::ComparisonQuery>(instance.query);
    out += "query compare " + c.i.to_string(instance.alphabet) + " " +
           c.j.to_string(instance.alphabet) + "\n";
  }
  return out;
}

}  // namespace doxa
