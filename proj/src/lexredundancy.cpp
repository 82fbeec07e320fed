#include "doxa/lexredundancy.hpp"

#include <cassert>

#include "doxa/error.hpp"

namespace doxa {

bool formula_leq(const Formula& a, const Model& i, const Model& j) {
  return evaluate(a, i) || !evaluate(a, j);
}

// Peeling the last formula: i <= j afterwards iff a keeps i weakly ahead and
// either a strictly favours i or the earlier formulae already had i <= j.
bool lex_seq_leq(std::span<const Formula> s, const Model& i, const Model& j) {
  bool leq = true;  // empty sequence: flat state
  for (const Formula& a : s) {
    leq = formula_leq(a, i, j) && (!formula_leq(a, j, i) || leq);
  }
  return leq;
}

bool mixed_lex_vrad_leq(std::span<const RevisionStep> s, const Model& i,
                        const Model& j) {
  bool le = true;
  bool ge = true;
  for (const RevisionStep& step : s) {
    const bool ai = evaluate(step.payload, i);
    const bool aj = evaluate(step.payload, j);
    bool nle, nge;
    switch (step.op) {
      case Operator::Lexicographic:
        nle = (ai && !aj) || (ai == aj && le);
        nge = (aj && !ai) || (ai == aj && ge);
        break;
      case Operator::VeryRadical:
        // everything outside the payload collapses into one final class
        nle = (ai && !aj) || (ai && aj && le) || (!ai && !aj);
        nge = (aj && !ai) || (ai && aj && ge) || (!ai && !aj);
        break;
      default:
        throw UnsupportedOperator(
            std::string("symbolic comparison supports lex and vrad steps only, got ") +
            operator_name(step.op));
    }
    le = nle;
    ge = nge;
  }
  return le;
}

Formula q_combination(std::span<const Formula> formulae, const QSelector& selector) {
  assert(selector.size() == formulae.size());
  std::vector<Formula> parts;
  parts.reserve(formulae.size());
  for (std::size_t k = 0; k < formulae.size(); ++k)
    parts.push_back(selector[k] ? formulae[k] : Formula::negation(formulae[k]));
  return Formula::conjunction(std::move(parts));
}

namespace {

// Shared sweep over all sign selections of s[1..].  Returns nullopt when
// some combination settles s[0] neither way; otherwise the selectors whose
// combination entails s[0].
std::optional<std::vector<QSelector>> sweep_combinations(
    std::span<const Formula> s, const Alphabet& alphabet, std::size_t enum_bound,
    std::size_t combination_limit) {
  assert(!s.empty());
  const std::size_t rest = s.size() - 1;
  if (rest > combination_limit) throw CombinationLimitExceeded(rest, combination_limit);

  const Formula& first = s[0];
  const Formula not_first = Formula::negation(first);
  std::vector<QSelector> entailing;
  for (std::size_t counter = 0; counter < (std::size_t{1} << rest); ++counter) {
    QSelector selector(rest);
    for (std::size_t k = 0; k < rest; ++k) selector[k] = (counter >> k) & 1;
    const Formula q = q_combination(s.subspan(1), selector);
    if (entails(q, first, alphabet, enum_bound)) {
      entailing.push_back(std::move(selector));
    } else if (!entails(q, not_first, alphabet, enum_bound)) {
      return std::nullopt;
    }
  }
  return entailing;
}

}  // namespace

bool redundant_first_lex_flat(std::span<const Formula> s, const Alphabet& alphabet,
                              std::size_t enum_bound, std::size_t combination_limit) {
  return sweep_combinations(s, alphabet, enum_bound, combination_limit).has_value();
}

std::optional<std::vector<QSelector>> redundant_first_as_disjunction(
    std::span<const Formula> s, const Alphabet& alphabet, std::size_t enum_bound,
    std::size_t combination_limit) {
  return sweep_combinations(s, alphabet, enum_bound, combination_limit);
}

bool redundant_two_lex_flat(const Formula& s1, const Formula& s2,
                            const Alphabet& alphabet, std::size_t enum_bound) {
  return is_unsat(s1, alphabet, enum_bound) || is_valid(s1, alphabet, enum_bound) ||
         equivalent(s1, s2, alphabet, enum_bound) ||
         equivalent(s1, Formula::negation(s2), alphabet, enum_bound);
}

bool redundant_general(const DoxasticState& initial, const RevisionSequence& steps,
                       std::size_t index, const Alphabet& alphabet,
                       std::size_t enum_bound) {
  assert(index < steps.size());
  RevisionSequence without = steps;
  without.erase(without.begin() + static_cast<std::ptrdiff_t>(index));
  return apply_sequence(initial, steps, alphabet, enum_bound) ==
         apply_sequence(initial, without, alphabet, enum_bound);
}

}  // namespace doxa
