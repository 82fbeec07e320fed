#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "doxa/error.hpp"
#include "doxa/lexredundancy.hpp"
#include "doxa/revision.hpp"
#include "support.hpp"

using namespace doxa;
using test::letters;
using test::m;
using test::state_of;

namespace {

std::vector<Formula> fs(std::initializer_list<const char*> texts, const Alphabet& al) {
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse_formula(t, al));
  return out;
}

RevisionSequence lex_steps(const std::vector<Formula>& formulas) {
  RevisionSequence steps;
  for (const Formula& f : formulas) steps.push_back({Operator::Lexicographic, f});
  return steps;
}

std::vector<Formula> random_satisfiable(std::mt19937& rng, const Alphabet& al,
                                        std::size_t count, int depth) {
  std::vector<Formula> out;
  while (out.size() < count) {
    Formula f = test::random_formula(rng, al, depth);
    if (!is_unsat(f, al)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

TEST_CASE("single-formula order") {
  const Alphabet al = letters(1);
  const Formula a = parse_formula("a", al);
  CHECK(formula_leq(a, m(1, al), m(0, al)));
  CHECK_FALSE(formula_leq(a, m(0, al), m(1, al)));
  CHECK(formula_leq(a, m(0, al), m(0, al)));
  CHECK(formula_leq(a, m(1, al), m(1, al)));
}

TEST_CASE("sequence order on worked sequences") {
  const Alphabet al = letters(2);
  const std::vector<Formula> empty;
  CHECK(lex_seq_leq(empty, m(0, al), m(3, al)));
  CHECK(lex_seq_leq(empty, m(3, al), m(0, al)));

  // both models satisfy the only formula: tied either way
  const std::vector<Formula> one = fs({"a"}, al);
  CHECK(lex_seq_leq(one, m(0b01, al), m(0b11, al)));
  CHECK(lex_seq_leq(one, m(0b11, al), m(0b01, al)));

  // the middle step collapses to ~a, the last to a | (~a & ~b)
  const std::vector<Formula> s =
      fs({"a", "~a | (a & b & false)", "a | (~a & ~b & true)"}, al);
  const Model i = m(0b10, al);  // {b}
  const Model j = m(0b01, al);  // {a}
  CHECK_FALSE(lex_seq_leq(s, i, j));
  CHECK(lex_seq_leq(s, j, i));
  const DoxasticState built = apply_sequence(DoxasticState::flat(al), lex_steps(s), al);
  CHECK(built == state_of(al, {"~a & ~b", "a", "~a & b"}));
  CHECK(built.compare(i, j) == Comparison::Greater);
}

TEST_CASE("sequence order agrees with the built state") {
  std::mt19937 rng(118);
  for (int round = 0; round < 120; ++round) {
    const int nvars = 1 + static_cast<int>(rng() % 4);
    const Alphabet al = letters(nvars);
    const std::vector<Formula> s =
        random_satisfiable(rng, al, rng() % 4, 3);
    const DoxasticState built =
        apply_sequence(DoxasticState::flat(al), lex_steps(s), al);
    const std::uint32_t total = 1u << nvars;
    for (std::uint32_t i = 0; i < total; ++i)
      for (std::uint32_t j = 0; j < total; ++j)
        CHECK(lex_seq_leq(s, m(i, al), m(j, al)) ==
              (built.compare(m(i, al), m(j, al)) != Comparison::Greater));
  }
}

TEST_CASE("an unsatisfiable step never moves the order") {
  const Alphabet al = letters(2);
  const std::vector<Formula> with = fs({"a", "b & ~b", "a | b"}, al);
  const std::vector<Formula> without = fs({"a", "a | b"}, al);
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j)
      CHECK(lex_seq_leq(with, m(i, al), m(j, al)) ==
            lex_seq_leq(without, m(i, al), m(j, al)));
}

TEST_CASE("mixed order supports very radical steps") {
  const Alphabet al = letters(1);
  const Formula a = parse_formula("a", al);
  const Formula na = parse_formula("~a", al);

  const RevisionSequence just_vrad = {{Operator::VeryRadical, a}};
  CHECK(mixed_lex_vrad_leq(just_vrad, m(1, al), m(0, al)));
  CHECK_FALSE(mixed_lex_vrad_leq(just_vrad, m(0, al), m(1, al)));

  const RevisionSequence both = {{Operator::Lexicographic, a},
                                 {Operator::VeryRadical, na}};
  CHECK(mixed_lex_vrad_leq(both, m(0, al), m(1, al)));
  CHECK_FALSE(mixed_lex_vrad_leq(both, m(1, al), m(0, al)));

  const RevisionSequence none;
  CHECK(mixed_lex_vrad_leq(none, m(0, al), m(1, al)));

  const RevisionSequence bad = {{Operator::Natural, a}};
  CHECK_THROWS_AS(mixed_lex_vrad_leq(bad, m(0, al), m(1, al)), UnsupportedOperator);
}

TEST_CASE("mixed order agrees with the built state") {
  std::mt19937 rng(2024);
  for (int round = 0; round < 120; ++round) {
    const int nvars = 1 + static_cast<int>(rng() % 4);
    const Alphabet al = letters(nvars);
    RevisionSequence steps;
    const std::size_t len = rng() % 4;
    while (steps.size() < len) {
      Formula f = test::random_formula(rng, al, 3);
      if (is_unsat(f, al)) continue;
      steps.push_back({rng() % 2 ? Operator::Lexicographic : Operator::VeryRadical,
                       std::move(f)});
    }
    const DoxasticState built = apply_sequence(DoxasticState::flat(al), steps, al);
    const std::uint32_t total = 1u << nvars;
    for (std::uint32_t i = 0; i < total; ++i)
      for (std::uint32_t j = 0; j < total; ++j)
        CHECK(mixed_lex_vrad_leq(steps, m(i, al), m(j, al)) ==
              (built.compare(m(i, al), m(j, al)) != Comparison::Greater));
  }
}

TEST_CASE("sign combinations") {
  const Alphabet al = letters(3);
  const std::vector<Formula> pair = fs({"a | b", "c"}, al);
  CHECK(equivalent(q_combination(pair, {true, false}),
                   parse_formula("(a | b) & ~c", al), al));
  CHECK(equivalent(q_combination(pair, {false, false}),
                   parse_formula("~(a | b) & ~c", al), al));
  const std::vector<Formula> empty;
  CHECK(is_valid(q_combination(empty, {}), al));
  CHECK(equivalent(q_combination(fs({"a"}, al), {false}), parse_formula("~a", al), al));
}

TEST_CASE("dropping the first revision of worked sequences") {
  const Alphabet al = letters(2);
  CHECK(redundant_first_lex_flat(fs({"a", "a", "b"}, al), al));
  CHECK(redundant_first_lex_flat(fs({"~a", "a", "b"}, al), al));
  CHECK_FALSE(redundant_first_lex_flat(fs({"a", "b"}, al), al));
  CHECK(redundant_first_lex_flat(fs({"true", "b"}, al), al));
  CHECK(redundant_first_lex_flat(fs({"a & ~a", "b"}, al), al));
  CHECK_FALSE(redundant_first_lex_flat(fs({"a"}, al), al));
  CHECK(redundant_first_lex_flat(fs({"a | ~a"}, al), al));

  std::vector<Formula> too_many(23, parse_formula("a", al));
  CHECK_THROWS_AS(redundant_first_lex_flat(too_many, al), CombinationLimitExceeded);
  try {
    redundant_first_lex_flat(too_many, al);
  } catch (const CombinationLimitExceeded& e) {
    CHECK(e.formulae() == 22);
    CHECK(e.limit() == 20);
  }
}

TEST_CASE("the entailing combinations rebuild the dropped formula") {
  const Alphabet al = letters(2);

  const auto same = redundant_first_as_disjunction(fs({"a", "a"}, al), al);
  REQUIRE(same.has_value());
  CHECK(*same == std::vector<QSelector>{{true}});

  const auto taut = redundant_first_as_disjunction(fs({"true", "b"}, al), al);
  REQUIRE(taut.has_value());
  CHECK(*taut == std::vector<QSelector>{{false}, {true}});

  const auto unsat = redundant_first_as_disjunction(fs({"a & ~a", "b"}, al), al);
  REQUIRE(unsat.has_value());
  CHECK(unsat->empty());

  CHECK_FALSE(redundant_first_as_disjunction(fs({"a", "b"}, al), al).has_value());

  // whenever present, the disjunction of the selected combinations is the
  // dropped formula, and the remaining combinations refute it
  std::mt19937 rng(5150);
  int produced = 0;
  for (int round = 0; round < 400 && produced < 60; ++round) {
    const Alphabet a3 = letters(1 + rng() % 3);
    std::vector<Formula> s = random_satisfiable(rng, a3, 1 + rng() % 3, 2);
    if (rng() % 2 && s.size() > 1) s[0] = s[1 + rng() % (s.size() - 1)];
    const auto picked = redundant_first_as_disjunction(s, a3);
    if (!picked.has_value()) continue;
    ++produced;
    const std::vector<Formula> rest(s.begin() + 1, s.end());
    std::vector<Formula> parts;
    for (const QSelector& sel : *picked) parts.push_back(q_combination(rest, sel));
    CHECK(equivalent(Formula::disjunction(std::move(parts)), s[0], a3));
    const std::size_t count = std::size_t{1} << rest.size();
    for (std::size_t counter = 0; counter < count; ++counter) {
      QSelector sel(rest.size());
      for (std::size_t k = 0; k < rest.size(); ++k) sel[k] = (counter >> k) & 1;
      const bool chosen = std::find(picked->begin(), picked->end(), sel) != picked->end();
      CHECK(entails(q_combination(rest, sel),
                    chosen ? s[0] : Formula::negation(s[0]), a3));
    }
  }
  CHECK(produced >= 60);
}

TEST_CASE("two-step redundancy has four shapes") {
  const Alphabet al = letters(2);
  auto two = [&](const char* s1, const char* s2) {
    return redundant_two_lex_flat(parse_formula(s1, al), parse_formula(s2, al), al);
  };
  CHECK(two("a", "~a"));
  CHECK(two("true", "b"));
  CHECK(two("a & ~a", "b"));
  CHECK(two("a", "a"));
  CHECK(two("a | b", "~(a | b)"));
  CHECK_FALSE(two("a", "b"));
  CHECK_FALSE(two("a", "a | b"));
}

TEST_CASE("redundancy checks agree exhaustively on two variables") {
  const Alphabet al = letters(2);
  const std::vector<std::string> names = {"a", "b"};
  std::vector<Formula> table;
  for (std::uint32_t t = 0; t < 16; ++t)
    table.push_back(parse_formula(test::table_formula_text(t, names), al));
  const DoxasticState flat = DoxasticState::flat(al);
  for (std::uint32_t t1 = 0; t1 < 16; ++t1) {
    for (std::uint32_t t2 = 0; t2 < 16; ++t2) {
      const std::vector<Formula> s = {table[t1], table[t2]};
      const bool by_cases = redundant_two_lex_flat(s[0], s[1], al);
      const bool by_combinations = redundant_first_lex_flat(s, al);
      CHECK(by_cases == by_combinations);
      if (t1 != 0 && t2 != 0)  // both revisions well-defined
        CHECK(by_cases == redundant_general(flat, lex_steps(s), 0, al));
    }
  }
}

TEST_CASE("dropping the first revision matches the brute-force oracle") {
  std::mt19937 rng(31);
  for (int round = 0; round < 250; ++round) {
    const Alphabet al = letters(1 + rng() % 4);
    const std::vector<Formula> s = random_satisfiable(rng, al, 1 + rng() % 3, 2);
    CHECK(redundant_first_lex_flat(s, al) ==
          redundant_general(DoxasticState::flat(al), lex_steps(s), 0, al));
  }
}

TEST_CASE("redundancy of any step against the brute-force definition") {
  const Alphabet abc = letters(3);
  const DoxasticState flat = DoxasticState::flat(abc);

  const RevisionSequence good = {
      {Operator::Lexicographic, parse_formula("a | b", abc)},
      {Operator::Lexicographic, parse_formula("a", abc)},
      {Operator::DeepSevere, parse_formula("a | (~a & ~b & c & c)", abc)},
  };
  CHECK(redundant_general(flat, good, 0, abc));

  const RevisionSequence bad = {
      {Operator::Lexicographic, parse_formula("a | b", abc)},
      {Operator::Lexicographic, parse_formula("a", abc)},
      {Operator::DeepSevere, parse_formula("a | (~a & ~b & c & (c & ~c))", abc)},
  };
  CHECK_FALSE(redundant_general(flat, bad, 0, abc));

  const RevisionSequence noop = {{Operator::Lexicographic, parse_formula("true", abc)}};
  CHECK(redundant_general(flat, noop, 0, abc));
}

TEST_CASE("a skipped revision can matter only until the sequence restarts") {
  const Alphabet al = letters(2);
  const Formula s1 = parse_formula("a", al);
  const Formula f = parse_formula("~a | b", al);
  const Formula r = parse_formula("a & b", al);
  const DoxasticState flat = DoxasticState::flat(al);

  const RevisionSequence fs_seq = {{Operator::Lexicographic, f},
                                   {Operator::Lexicographic, s1}};
  CHECK_FALSE(redundant_general(flat, fs_seq, 0, al));

  const RevisionSequence rfs_seq = {{Operator::Lexicographic, r},
                                    {Operator::Lexicographic, f},
                                    {Operator::Lexicographic, s1}};
  CHECK(redundant_general(flat, rfs_seq, 1, al));
}

TEST_CASE("repeating a formula or its negation in front changes nothing") {
  const Alphabet al = letters(2);
  CHECK(redundant_first_lex_flat(fs({"a", "a", "b"}, al), al));
  CHECK(redundant_first_lex_flat(fs({"~a", "a", "b"}, al), al));

  std::mt19937 rng(8128);
  for (int round = 0; round < 150; ++round) {
    const Alphabet a3 = letters(1 + rng() % 3);
    std::vector<Formula> s = random_satisfiable(rng, a3, 1 + rng() % 3, 2);
    Formula echo = s[rng() % s.size()];
    if (rng() % 2) echo = Formula::negation(echo);
    std::vector<Formula> extended = {echo};
    extended.insert(extended.end(), s.begin(), s.end());
    CHECK(redundant_first_lex_flat(extended, a3));
  }
}

TEST_CASE("order comparisons survive removing a leading block") {
  std::mt19937 rng(1234);
  for (int round = 0; round < 200; ++round) {
    const Alphabet al = letters(1 + rng() % 3);
    std::vector<Formula> prefix;
    for (std::size_t k = rng() % 3; k > 0; --k)
      prefix.push_back(test::random_formula(rng, al, 2));
    std::vector<Formula> tail;
    for (std::size_t k = rng() % 3; k > 0; --k)
      tail.push_back(test::random_formula(rng, al, 2));
    std::vector<Formula> whole = prefix;
    whole.insert(whole.end(), tail.begin(), tail.end());
    const std::uint32_t total = 1u << al.size();
    const Model i = m(rng() % total, al);
    const Model j = m(rng() % total, al);
    if (lex_seq_leq(whole, i, j)) CHECK(lex_seq_leq(tail, i, j));
  }
}

TEST_CASE("ties factor through concatenation") {
  std::mt19937 rng(4321);
  for (int round = 0; round < 200; ++round) {
    const Alphabet al = letters(1 + rng() % 3);
    std::vector<Formula> r, q;
    for (std::size_t k = rng() % 3; k > 0; --k)
      r.push_back(test::random_formula(rng, al, 2));
    for (std::size_t k = rng() % 3; k > 0; --k)
      q.push_back(test::random_formula(rng, al, 2));
    std::vector<Formula> whole = r;
    whole.insert(whole.end(), q.begin(), q.end());
    const std::uint32_t total = 1u << al.size();
    for (std::uint32_t i = 0; i < total; ++i) {
      for (std::uint32_t j = 0; j < total; ++j) {
        const Model mi = m(i, al), mj = m(j, al);
        const bool tied_whole = lex_seq_leq(whole, mi, mj) && lex_seq_leq(whole, mj, mi);
        const bool tied_r = lex_seq_leq(r, mi, mj) && lex_seq_leq(r, mj, mi);
        const bool tied_q = lex_seq_leq(q, mi, mj) && lex_seq_leq(q, mj, mi);
        CHECK(tied_whole == (tied_r && tied_q));
      }
    }
  }
}

TEST_CASE("ties are exactly agreement on every sign combination") {
  std::mt19937 rng(777);
  for (int round = 0; round < 100; ++round) {
    const Alphabet al = letters(1 + rng() % 3);
    std::vector<Formula> s;
    for (std::size_t k = rng() % 4; k > 0; --k)
      s.push_back(test::random_formula(rng, al, 2));
    const std::uint32_t total = 1u << al.size();
    const std::size_t combos = std::size_t{1} << s.size();
    for (std::uint32_t i = 0; i < total; ++i) {
      for (std::uint32_t j = 0; j < total; ++j) {
        const Model mi = m(i, al), mj = m(j, al);
        const bool tied = lex_seq_leq(s, mi, mj) && lex_seq_leq(s, mj, mi);
        bool agree = true;
        for (std::size_t counter = 0; counter < combos && agree; ++counter) {
          QSelector sel(s.size());
          for (std::size_t k = 0; k < s.size(); ++k) sel[k] = (counter >> k) & 1;
          const Formula q = q_combination(s, sel);
          agree = evaluate(q, mi) == evaluate(q, mj);
        }
        CHECK(tied == agree);
      }
    }
  }
}

TEST_CASE("distinct sign combinations exclude each other") {
  std::mt19937 rng(999);
  for (int round = 0; round < 80; ++round) {
    const Alphabet al = letters(1 + rng() % 3);
    std::vector<Formula> s;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k)
      s.push_back(test::random_formula(rng, al, 2));
    const std::size_t combos = std::size_t{1} << s.size();
    std::vector<ModelSet> seen;
    for (std::size_t counter = 0; counter < combos; ++counter) {
      QSelector sel(s.size());
      for (std::size_t k = 0; k < s.size(); ++k) sel[k] = (counter >> k) & 1;
      seen.push_back(models(q_combination(s, sel), al));
    }
    for (std::size_t x = 0; x < seen.size(); ++x)
      for (std::size_t y = x + 1; y < seen.size(); ++y)
        CHECK(intersection(seen[x], seen[y]).empty());
  }
}

TEST_CASE("a droppable first step stays droppable under later insertions") {
  std::mt19937 rng(606);
  int hits = 0;
  for (int round = 0; round < 300 && hits < 80; ++round) {
    const Alphabet al = letters(1 + rng() % 3);
    std::vector<Formula> s = random_satisfiable(rng, al, 2 + rng() % 2, 2);
    if (rng() % 2) s[0] = rng() % 2 ? s[1] : Formula::negation(s[1]);
    if (!redundant_first_lex_flat(s, al)) continue;
    ++hits;
    const Formula g = test::random_formula(rng, al, 2);
    const std::size_t at = 1 + rng() % s.size();
    std::vector<Formula> inserted = s;
    inserted.insert(inserted.begin() + static_cast<std::ptrdiff_t>(at), g);
    CHECK(redundant_first_lex_flat(inserted, al));
  }
  CHECK(hits >= 80);
}

TEST_CASE("equal results stay equal under a common leading block") {
  std::mt19937 rng(11235);
  for (int round = 0; round < 120; ++round) {
    const Alphabet al = letters(1 + rng() % 3);
    std::vector<Formula> s = random_satisfiable(rng, al, 1 + rng() % 2, 2);
    std::vector<Formula> s2 = s;
    switch (rng() % 3) {
      case 0:  // repeat the last step
        s2.push_back(s2.back());
        break;
      case 1:  // rewrite one step as a double negation
        s2[rng() % s2.size()] =
            Formula::negation(Formula::negation(s2[rng() % s2.size()]));
        break;
      default:  // an unrelated satisfiable sequence, kept only if tied
        s2 = random_satisfiable(rng, al, 1 + rng() % 2, 2);
        break;
    }
    const DoxasticState flat = DoxasticState::flat(al);
    if (apply_sequence(flat, lex_steps(s), al) != apply_sequence(flat, lex_steps(s2), al))
      continue;
    std::vector<Formula> r = random_satisfiable(rng, al, 1 + rng() % 2, 2);
    std::vector<Formula> rs = r, rs2 = r;
    rs.insert(rs.end(), s.begin(), s.end());
    rs2.insert(rs2.end(), s2.begin(), s2.end());
    CHECK(apply_sequence(flat, lex_steps(rs), al) ==
          apply_sequence(flat, lex_steps(rs2), al));
  }
}
