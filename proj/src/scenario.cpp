#include "doxa/scenario.hpp"

#include <algorithm>
#include <set>
#include <span>

#include "doxa/error.hpp"
#include "doxa/lexredundancy.hpp"
#include "doxa/state.hpp"

namespace doxa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// first whitespace-delimited word and the rest (with its column offset)
struct Split {
  std::string_view word;
  std::string_view rest;
  std::size_t rest_column;  // one-based within the original line
};

Split split_word(std::string_view line, std::size_t base_column) {
  std::size_t i = 0;
  while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
  std::size_t j = i;
  while (j < line.size() && (line[j] == ' ' || line[j] == '\t')) ++j;
  return {line.substr(0, i), line.substr(j), base_column + j};
}

Formula parse_formula_at(std::string_view text, const Alphabet& alphabet,
                         std::size_t line, std::size_t column) {
  try {
    return parse_formula(text, alphabet);
  } catch (const UnknownVariableError& e) {
    throw UnknownVariableError(e.name(), line, column + e.column() - 1);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), line, column + e.column() - 1);
  }
}

Model parse_model_at(std::string_view text, const Alphabet& alphabet,
                     std::size_t line, std::size_t column) {
  try {
    return parse_model(text, alphabet);
  } catch (const UnknownVariableError& e) {
    throw UnknownVariableError(e.name(), line, column + e.column() - 1);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), line, column + e.column() - 1);
  }
}

// exactly two "{...}" groups and nothing else
std::pair<Model, Model> parse_model_pair(std::string_view rest, const Alphabet& alphabet,
                                         std::size_t line, std::size_t column) {
  std::vector<Model> found;
  std::size_t i = 0;
  while (i < rest.size()) {
    if (rest[i] == ' ' || rest[i] == '\t') {
      ++i;
      continue;
    }
    if (rest[i] != '{') throw ParseError("expected a model literal", line, column + i);
    const std::size_t start = i;
    while (i < rest.size() && rest[i] != '}') ++i;
    if (i >= rest.size()) throw ParseError("unterminated model literal", line, column + start);
    ++i;
    found.push_back(
        parse_model_at(rest.substr(start, i - start), alphabet, line, column + start));
  }
  if (found.size() != 2)
    throw ParseError("expected exactly two model literals", line, column);
  return {found[0], found[1]};
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Scenario scenario;
  bool saw_vars = false;
  bool saw_state = false;
  bool saw_query = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    std::string_view line = raw.substr(0, std::min(raw.find('#'), raw.size()));
    const std::size_t lead = trim(line).empty() ? 0 : line.find_first_not_of(" \t");
    line = trim(line);
    if (line.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    const std::size_t base_column = lead + 1;

    auto [word, rest, rest_col] = split_word(line, base_column);

    if (word == "vars") {
      if (saw_vars) throw ParseError("duplicate vars line", line_no, base_column);
      if (saw_state || !scenario.steps.empty() || saw_query)
        throw ParseError("vars must be the first directive", line_no, base_column);
      std::vector<std::string> names;
      std::string_view remaining = rest;
      while (!remaining.empty()) {
        Split part = split_word(remaining, 0);
        names.emplace_back(part.word);
        remaining = part.rest;
      }
      try {
        scenario.alphabet = Alphabet(std::move(names));
      } catch (const AlphabetError& e) {
        throw ParseError(e.what(), line_no, rest_col);
      }
      saw_vars = true;
      continue;
    }

    if (!saw_vars) throw ParseError("vars line required first", line_no, base_column);

    if (word == "state") {
      if (saw_state) throw ParseError("duplicate state line", line_no, base_column);
      if (!scenario.steps.empty() || saw_query)
        throw ParseError("state must precede revise and query lines", line_no, base_column);
      saw_state = true;
      scenario.initial_line = line_no;
      auto [kind, spec, spec_col] = split_word(rest, rest_col);
      if (kind == "flat") {
        if (!trim(spec).empty())
          throw ParseError("unexpected input after 'state flat'", line_no, spec_col);
        scenario.initial_kind = Scenario::InitialKind::Flat;
      } else if (kind == "formula") {
        scenario.initial_kind = Scenario::InitialKind::FromFormula;
        scenario.initial_formulas.push_back(
            parse_formula_at(spec, scenario.alphabet, line_no, spec_col));
      } else if (kind == "classes") {
        scenario.initial_kind = Scenario::InitialKind::FromClasses;
        std::size_t at = 0;
        while (at <= spec.size()) {
          std::size_t stop = spec.find(';', at);
          if (stop == std::string_view::npos) stop = spec.size();
          std::string_view part = spec.substr(at, stop - at);
          if (trim(part).empty())
            throw ParseError("empty class formula", line_no, spec_col + at);
          scenario.initial_formulas.push_back(
              parse_formula_at(part, scenario.alphabet, line_no, spec_col + at));
          if (stop == spec.size()) break;
          at = stop + 1;
        }
        if (scenario.initial_formulas.empty())
          throw ParseError("state classes needs at least one formula", line_no, spec_col);
      } else {
        throw ParseError("expected flat, formula or classes", line_no, rest_col);
      }
      continue;
    }

    if (word == "revise") {
      if (saw_query)
        throw ParseError("revise lines must precede query lines", line_no, base_column);
      auto [op_name, payload, payload_col] = split_word(rest, rest_col);
      auto op = operator_from_name(op_name);
      if (!op)
        throw ParseError("unknown operator '" + std::string(op_name) + "'", line_no,
                         rest_col);
      if (trim(payload).empty())
        throw ParseError("revise needs a formula", line_no, payload_col);
      scenario.steps.push_back(
          {{*op, parse_formula_at(payload, scenario.alphabet, line_no, payload_col)},
           line_no});
      continue;
    }

    if (word == "query") {
      saw_query = true;
      auto [kind, args, args_col] = split_word(rest, rest_col);
      Scenario::Query query;
      query.line = line_no;
      if (kind == "state") {
        if (!trim(args).empty())
          throw ParseError("unexpected input after 'query state'", line_no, args_col);
        query.kind = Scenario::Query::Kind::State;
      } else if (kind == "compare" || kind == "leq-lex") {
        query.kind = kind == "compare" ? Scenario::Query::Kind::Compare
                                       : Scenario::Query::Kind::LeqLex;
        auto [i, j] = parse_model_pair(args, scenario.alphabet, line_no, args_col);
        query.i = i;
        query.j = j;
      } else if (kind == "redundant") {
        query.kind = Scenario::Query::Kind::Redundant;
        std::size_t value = 0;
        std::string_view digits = trim(args);
        if (digits.empty()) throw ParseError("expected a step number", line_no, args_col);
        for (char c : digits) {
          if (c < '0' || c > '9')
            throw ParseError("expected a step number", line_no, args_col);
          value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        query.index = value;  // one-based for now, checked below
      } else if (kind == "redundant-first-lex") {
        if (!trim(args).empty())
          throw ParseError("unexpected input after 'query redundant-first-lex'", line_no,
                           args_col);
        query.kind = Scenario::Query::Kind::RedundantFirstLex;
      } else {
        throw ParseError("unknown query '" + std::string(kind) + "'", line_no, rest_col);
      }
      scenario.queries.push_back(std::move(query));
      continue;
    }

    throw ParseError("unknown directive '" + std::string(word) + "'", line_no,
                     base_column);
  }

  if (!saw_vars) throw ParseError("vars line required", 1, 0);

  for (Scenario::Query& query : scenario.queries) {
    if (query.kind != Scenario::Query::Kind::Redundant) continue;
    if (query.index < 1 || query.index > scenario.steps.size())
      throw ParseError("step number out of range", query.line, 0);
    --query.index;  // zero-based from here on
  }
  return scenario;
}

namespace {

std::vector<Formula> lex_payloads(const Scenario& scenario, std::size_t query_line) {
  if (scenario.initial_kind != Scenario::InitialKind::Flat)
    throw Error("query on line " + std::to_string(query_line) +
                " requires the flat initial state");
  std::vector<Formula> payloads;
  for (const Scenario::Step& s : scenario.steps) {
    if (s.step.op != Operator::Lexicographic)
      throw UnsupportedOperator("query on line " + std::to_string(query_line) +
                                " requires lexicographic steps only");
    payloads.push_back(s.step.payload);
  }
  return payloads;
}

}  // namespace

std::string run_scenario(const Scenario& scenario, std::size_t enum_bound) {
  DoxasticState initial;
  switch (scenario.initial_kind) {
    case Scenario::InitialKind::Flat:
      initial = DoxasticState::flat(scenario.alphabet, enum_bound);
      break;
    case Scenario::InitialKind::FromFormula:
      initial = DoxasticState::from_formula(scenario.initial_formulas[0],
                                            scenario.alphabet, enum_bound);
      break;
    case Scenario::InitialKind::FromClasses: {
      std::vector<ModelSet> sets;
      for (const Formula& f : scenario.initial_formulas)
        sets.push_back(models(f, scenario.alphabet, enum_bound));
      try {
        initial = DoxasticState::from_classes(static_cast<int>(scenario.alphabet.size()),
                                              std::move(sets));
      } catch (const Error& e) {
        throw Error(std::string(e.what()) + " (line " +
                    std::to_string(scenario.initial_line) + ")");
      }
      break;
    }
  }

  RevisionSequence steps;
  for (const Scenario::Step& s : scenario.steps) steps.push_back(s.step);

  DoxasticState current = initial;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    ModelSet a = models(steps[i].payload, scenario.alphabet, enum_bound);
    if (a.empty())
      throw Error("revision by an inconsistent formula at step " + std::to_string(i + 1) +
                  " (line " + std::to_string(scenario.steps[i].line) + ")");
    current = revise(current, steps[i].op, a);
  }

  std::string out;
  for (const Scenario::Query& query : scenario.queries) {
    switch (query.kind) {
      case Scenario::Query::Kind::State:
        out += current.to_string(scenario.alphabet);
        break;
      case Scenario::Query::Kind::Compare:
        out += comparison_name(current.compare(*query.i, *query.j));
        break;
      case Scenario::Query::Kind::Redundant:
        out += redundant_general(initial, steps, query.index, scenario.alphabet,
                                 enum_bound)
                   ? "redundant"
                   : "irredundant";
        break;
      case Scenario::Query::Kind::RedundantFirstLex: {
        std::vector<Formula> payloads = lex_payloads(scenario, query.line);
        if (payloads.empty())
          throw Error("query on line " + std::to_string(query.line) +
                      " requires at least one revision step");
        out += redundant_first_lex_flat(payloads, scenario.alphabet, enum_bound)
                   ? "redundant"
                   : "irredundant";
        break;
      }
      case Scenario::Query::Kind::LeqLex: {
        std::vector<Formula> payloads = lex_payloads(scenario, query.line);
        out += lex_seq_leq(payloads, *query.i, *query.j) ? "true" : "false";
        break;
      }
    }
    out += "\n";
  }
  return out;
}

namespace {

Alphabet shared_alphabet(const ParsedHorn& p1, const ParsedHorn& p2) {
  std::set<std::string> names(p1.variables.begin(), p1.variables.end());
  names.insert(p2.variables.begin(), p2.variables.end());
  return Alphabet(std::vector<std::string>(names.begin(), names.end()));
}

}  // namespace

HornCheck horn_check_redundant(std::string_view text1, std::string_view text2) {
  ParsedHorn p1 = parse_horn_text(text1);
  ParsedHorn p2 = parse_horn_text(text2);
  Alphabet alphabet = shared_alphabet(p1, p2);
  const BinaryRedundancyCase which =
      binary_horn_redundancy_case(bind_horn(p1, alphabet), bind_horn(p2, alphabet));
  return {which != BinaryRedundancyCase::None, which};
}

HornCheck horn_check_neg_equiv(std::string_view text1, std::string_view text2) {
  ParsedHorn p1 = parse_horn_text(text1);
  ParsedHorn p2 = parse_horn_text(text2);
  Alphabet alphabet = shared_alphabet(p1, p2);
  const bool result =
      horn_equiv_negation(bind_horn(p1, alphabet), bind_horn(p2, alphabet));
  return {result, BinaryRedundancyCase::None};
}

}  // namespace doxa
