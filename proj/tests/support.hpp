#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "doxa/formula.hpp"
#include "doxa/horn.hpp"
#include "doxa/state.hpp"

namespace doxa::test {

// alphabet of the first n letters: a, b, c, ...
inline Alphabet letters(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(names));
}

inline Model m(std::uint32_t bits, const Alphabet& alphabet) {
  return Model(bits, static_cast<int>(alphabet.size()));
}

inline DoxasticState state_of(const Alphabet& alphabet,
                              const std::vector<const char*>& class_formulas) {
  std::vector<ModelSet> classes;
  for (const char* text : class_formulas)
    classes.push_back(models(parse_formula(text, alphabet), alphabet));
  return DoxasticState::from_classes(static_cast<int>(alphabet.size()),
                                     std::move(classes));
}

inline DoxasticState state_of(const Alphabet& alphabet,
                              std::initializer_list<const char*> class_formulas) {
  return state_of(alphabet, std::vector<const char*>(class_formulas));
}

inline Formula random_formula(std::mt19937& rng, const Alphabet& alphabet, int depth) {
  auto var = [&] {
    return Formula::variable(static_cast<std::size_t>(rng() % alphabet.size()));
  };
  if (depth <= 0) {
    if (rng() % 8 == 0) return Formula::constant(rng() % 2 == 0);
    return var();
  }
  switch (rng() % 8) {
    case 0:
      return var();
    case 1:
      return Formula::constant(rng() % 2 == 0);
    case 2:
    case 3:
      return Formula::negation(random_formula(rng, alphabet, depth - 1));
    case 4: {
      std::vector<Formula> kids;
      const std::size_t n = 2 + rng() % 2;
      for (std::size_t i = 0; i < n; ++i)
        kids.push_back(random_formula(rng, alphabet, depth - 1));
      return Formula::conjunction(std::move(kids));
    }
    case 5: {
      std::vector<Formula> kids;
      const std::size_t n = 2 + rng() % 2;
      for (std::size_t i = 0; i < n; ++i)
        kids.push_back(random_formula(rng, alphabet, depth - 1));
      return Formula::disjunction(std::move(kids));
    }
    case 6:
      return Formula::implication(random_formula(rng, alphabet, depth - 1),
                                  random_formula(rng, alphabet, depth - 1));
    default:
      return Formula::equivalence(random_formula(rng, alphabet, depth - 1),
                                  random_formula(rng, alphabet, depth - 1));
  }
}

// Disjunction of minterms over the given names: row k of the table is true
// when, for each i, the i-th name is assigned bit i of k.  Table 0 is false.
inline std::string table_formula_text(std::uint32_t table,
                                      const std::vector<std::string>& names) {
  const std::uint32_t rows = std::uint32_t{1} << names.size();
  std::string out;
  for (std::uint32_t k = 0; k < rows; ++k) {
    if (!((table >> k) & 1u)) continue;
    if (!out.empty()) out += " | ";
    out += "(";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i > 0) out += " & ";
      if (!((k >> i) & 1u)) out += "~";
      out += names[i];
    }
    out += ")";
  }
  return out.empty() ? "false" : out;
}

// clause from 1-based signed variable numbers: 2 is the second variable, -2
// its negation
inline HornClause clause(std::initializer_list<int> lits) {
  std::vector<HornLiteral> parsed;
  for (int v : lits)
    parsed.push_back(v > 0 ? pos(static_cast<std::size_t>(v - 1))
                           : neg(static_cast<std::size_t>(-v - 1)));
  return HornClause(std::move(parsed));
}

inline HornFormula horn(std::size_t nvars,
                        std::initializer_list<std::initializer_list<int>> clauses) {
  std::vector<HornClause> parsed;
  for (const auto& c : clauses) parsed.push_back(clause(c));
  return HornFormula(nvars, std::move(parsed));
}

inline HornFormula random_horn(std::mt19937& rng, std::size_t nvars,
                               std::size_t max_clauses) {
  const std::size_t count = rng() % (max_clauses + 1);
  std::vector<HornClause> clauses;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<HornLiteral> lits;
    const std::size_t body = rng() % 4;
    for (std::size_t k = 0; k < body; ++k) lits.push_back(neg(rng() % nvars));
    if (rng() % 3 != 0) lits.push_back(pos(rng() % nvars));
    clauses.push_back(HornClause(std::move(lits)));
  }
  return HornFormula(nvars, std::move(clauses));
}

// every Horn clause over the first `nvars` variables (each variable absent,
// positive, negative or both ways, at most one positive overall)
inline std::vector<HornClause> all_small_horn_clauses(std::size_t nvars) {
  std::vector<HornClause> out;
  std::size_t combos = 1;
  for (std::size_t v = 0; v < nvars; ++v) combos *= 4;
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::vector<HornLiteral> lits;
    std::size_t positives = 0;
    std::size_t rest = mask;
    for (std::size_t v = 0; v < nvars; ++v) {
      const std::size_t mode = rest % 4;
      rest /= 4;
      if (mode == 1 || mode == 3) {
        lits.push_back(pos(v));
        ++positives;
      }
      if (mode == 2 || mode == 3) lits.push_back(neg(v));
    }
    if (positives > 1) continue;
    out.push_back(HornClause(std::move(lits)));
  }
  return out;
}

}  // namespace doxa::test
