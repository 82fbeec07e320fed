#include "doxa/horn.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "doxa/error.hpp"

namespace doxa {

HornClause::HornClause(std::vector<HornLiteral> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
  std::size_t positives = 0;
  for (const HornLiteral& lit : literals_)
    if (lit.positive) ++positives;
  if (positives > 1) throw Error("clause has more than one positive literal");
}

bool HornClause::tautological() const {
  // sorted order puts ~x directly before x
  for (std::size_t i = 0; i + 1 < literals_.size(); ++i)
    if (literals_[i].var == literals_[i + 1].var) return true;
  return false;
}

bool HornClause::contains(HornLiteral lit) const {
  return std::binary_search(literals_.begin(), literals_.end(), lit);
}

std::optional<std::size_t> HornClause::head() const {
  for (const HornLiteral& lit : literals_)
    if (lit.positive) return lit.var;
  return std::nullopt;
}

HornFormula::HornFormula(std::size_t var_count, std::vector<HornClause> clauses)
    : var_count_(var_count), clauses_(std::move(clauses)) {
  for (const HornClause& c : clauses_)
    for (const HornLiteral& lit : c.literals())
      if (lit.var >= var_count_) throw Error("clause variable out of range");
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

// ---------------------------------------------------------------------------
// Unit propagation.  Clauses are split into a body of negative variables and
// an optional positive head; a clause whose body is exhausted forces its
// head.  Assumption queries are answered on a trail and undone, so one
// propagator serves many entailment checks.

namespace {

class Propagator {
 public:
  explicit Propagator(const HornFormula& f) {
    nvars_ = f.var_count();
    std::size_t body_total = 0;
    for (const HornClause& c : f.clauses()) {
      if (c.tautological()) continue;  // always satisfied
      heads_.push_back(-1);
      body_of_.emplace_back();
      auto& body = body_of_.back();
      for (const HornLiteral& lit : c.literals()) {
        if (lit.positive) {
          heads_.back() = static_cast<std::ptrdiff_t>(lit.var);
        } else {
          body.push_back(lit.var);
        }
      }
      body_total += body.size();
    }
    const std::size_t nclauses = heads_.size();
    count_.resize(nclauses);
    occ_start_.assign(nvars_ + 1, 0);
    for (const auto& body : body_of_)
      for (std::size_t v : body) ++occ_start_[v + 1];
    for (std::size_t v = 0; v < nvars_; ++v) occ_start_[v + 1] += occ_start_[v];
    occ_data_.resize(body_total);
    std::vector<std::size_t> fill(occ_start_.begin(), occ_start_.end() - 1);
    for (std::size_t i = 0; i < nclauses; ++i) {
      count_[i] = static_cast<int>(body_of_[i].size());
      for (std::size_t v : body_of_[i]) occ_data_[fill[v]++] = i;
    }
    true_.assign(nvars_, 0);
    forbidden_.assign(nvars_, 0);

    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < nclauses; ++i) {
      if (count_[i] != 0) continue;
      if (heads_[i] < 0) {
        contradiction_ = true;
        return;
      }
      const auto h = static_cast<std::size_t>(heads_[i]);
      if (!true_[h]) {
        true_[h] = 1;
        queue.push_back(h);
      }
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t v = queue[q];
      for (std::size_t k = occ_start_[v]; k < occ_start_[v + 1]; ++k) {
        const std::size_t i = occ_data_[k];
        if (--count_[i] != 0) continue;
        if (heads_[i] < 0) {
          contradiction_ = true;
          return;
        }
        const auto h = static_cast<std::size_t>(heads_[i]);
        if (!true_[h]) {
          true_[h] = 1;
          queue.push_back(h);
        }
      }
    }
  }

  bool contradiction() const { return contradiction_; }

  // minimal model membership (meaningful only when satisfiable)
  bool forced(std::size_t var) const { return true_[var] != 0; }

  // Is f plus the negation of `clause` inconsistent?
  bool unsat_with_negated(const HornClause& clause) {
    if (contradiction_) return true;
    bool conflict = false;
    queue_.clear();
    trail_true_.clear();
    trail_forbid_.clear();
    trail_count_.clear();
    for (const HornLiteral& lit : clause.literals()) {
      if (lit.positive) {
        // assume ~x
        if (true_[lit.var]) {
          conflict = true;
          break;
        }
        if (!forbidden_[lit.var]) {
          forbidden_[lit.var] = 1;
          trail_forbid_.push_back(lit.var);
        }
      } else {
        // assume x
        if (forbidden_[lit.var]) {
          conflict = true;
          break;
        }
        if (!true_[lit.var]) {
          true_[lit.var] = 1;
          trail_true_.push_back(lit.var);
          queue_.push_back(lit.var);
        }
      }
    }
    for (std::size_t q = 0; q < queue_.size() && !conflict; ++q) {
      const std::size_t v = queue_[q];
      for (std::size_t k = occ_start_[v]; k < occ_start_[v + 1]; ++k) {
        const std::size_t i = occ_data_[k];
        trail_count_.push_back(i);
        if (--count_[i] != 0) continue;
        if (heads_[i] < 0) {
          conflict = true;
          break;
        }
        const auto h = static_cast<std::size_t>(heads_[i]);
        if (forbidden_[h]) {
          conflict = true;
          break;
        }
        if (!true_[h]) {
          true_[h] = 1;
          trail_true_.push_back(h);
          queue_.push_back(h);
        }
      }
    }
    for (std::size_t i : trail_count_) ++count_[i];
    for (std::size_t v : trail_true_) true_[v] = 0;
    for (std::size_t v : trail_forbid_) forbidden_[v] = 0;
    return conflict;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<std::vector<std::size_t>> body_of_;
  std::vector<std::ptrdiff_t> heads_;
  std::vector<int> count_;
  std::vector<std::size_t> occ_start_;
  std::vector<std::size_t> occ_data_;
  std::vector<char> true_;
  std::vector<char> forbidden_;
  bool contradiction_ = false;

  std::vector<std::size_t> queue_;
  std::vector<std::size_t> trail_true_;
  std::vector<std::size_t> trail_forbid_;
  std::vector<std::size_t> trail_count_;
};

HornFormula without_tautologies(const HornFormula& f) {
  std::vector<HornClause> kept;
  for (const HornClause& c : f.clauses())
    if (!c.tautological()) kept.push_back(c);
  return HornFormula(f.var_count(), std::move(kept));
}

}  // namespace

bool horn_unsat(const HornFormula& f) { return Propagator(f).contradiction(); }

bool horn_entails_var(const HornFormula& f, std::size_t var) {
  Propagator p(f);
  return p.contradiction() || p.forced(var);
}

bool negvar_entails_horn(std::size_t var, const HornFormula& f) {
  for (const HornClause& c : f.clauses()) {
    if (c.tautological()) continue;
    if (!c.contains(neg(var))) return false;
  }
  return true;
}

bool horn_entails(const HornFormula& f, const HornFormula& g) {
  Propagator p(f);
  for (const HornClause& c : g.clauses())
    if (!p.unsat_with_negated(c)) return false;
  return true;
}

bool horn_equivalent(const HornFormula& f, const HornFormula& g) {
  return horn_entails(f, g) && horn_entails(g, f);
}

bool horn_is_tautological(const HornFormula& f) {
  for (const HornClause& c : f.clauses())
    if (!c.tautological()) return false;
  return true;
}

HornFormula remove_variable(const HornFormula& f, std::size_t var) {
  std::vector<HornClause> kept;
  for (const HornClause& c : f.clauses()) {
    if (c.contains(pos(var))) continue;
    if (c.contains(neg(var))) {
      std::vector<HornLiteral> lits;
      for (const HornLiteral& lit : c.literals())
        if (lit != neg(var)) lits.push_back(lit);
      kept.push_back(HornClause(std::move(lits)));
    } else {
      kept.push_back(c);
    }
  }
  return HornFormula(f.var_count(), std::move(kept));
}

namespace {

// One formula under the simplification loop, kept mutable so a variable
// removal costs time proportional to the literals it touches instead of a
// full rebuild.  Removing x acts as the substitution x:=true: clauses with
// x positive die, ~x literals resolve, and unit propagation runs on top.
// The queried facts (entailed, ~x-in-every-clause, occurs) then always
// describe the current reduced formula.
struct Side {
  bool unsat = false;
  std::size_t alive_clauses = 0;
  std::vector<char> clause_alive;
  std::vector<std::ptrdiff_t> head;    // positive literal, -1 if none
  std::vector<std::size_t> open_body;  // negative literals not yet resolved
  std::vector<std::vector<std::size_t>> by_pos;
  std::vector<std::vector<std::size_t>> by_neg;
  std::vector<std::size_t> occ;        // alive clauses mentioning x
  std::vector<std::size_t> neg_occ;    // alive clauses containing ~x
  std::vector<char> forced;
  std::vector<char> gone;
  const std::vector<HornClause>* source;

  Side(const HornFormula& f, std::size_t nvars)
      : by_pos(nvars), by_neg(nvars), occ(nvars, 0), neg_occ(nvars, 0),
        forced(nvars, 0), gone(nvars, 0), source(&f.clauses()) {
    const std::vector<HornClause>& cs = *source;
    clause_alive.assign(cs.size(), 1);
    head.assign(cs.size(), -1);
    open_body.assign(cs.size(), 0);
    alive_clauses = cs.size();
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (const HornLiteral& lit : cs[i].literals()) {
        ++occ[lit.var];
        if (lit.positive) {
          head[i] = static_cast<std::ptrdiff_t>(lit.var);
          by_pos[lit.var].push_back(i);
        } else {
          ++neg_occ[lit.var];
          ++open_body[i];
          by_neg[lit.var].push_back(i);
        }
      }
      if (open_body[i] == 0) fire(i, queue);  // unit or empty clause
    }
    propagate(queue);
  }

  bool entails(std::size_t x) const { return unsat || forced[x]; }
  bool all_neg(std::size_t x) const { return neg_occ[x] == alive_clauses; }
  bool occurs(std::size_t x) const { return occ[x] > 0; }
  bool no_clauses() const { return alive_clauses == 0; }

  void fire(std::size_t cl, std::vector<std::size_t>& queue) {
    if (head[cl] < 0) {
      unsat = true;
      return;
    }
    const std::size_t h = static_cast<std::size_t>(head[cl]);
    if (!forced[h]) {
      forced[h] = 1;
      queue.push_back(h);
    }
  }

  void propagate(std::vector<std::size_t>& queue) {
    while (!queue.empty()) {
      const std::size_t v = queue.back();
      queue.pop_back();
      for (std::size_t cl : by_neg[v])
        if (clause_alive[cl] && --open_body[cl] == 0) fire(cl, queue);
    }
  }

  void kill(std::size_t cl) {
    clause_alive[cl] = 0;
    --alive_clauses;
    for (const HornLiteral& lit : (*source)[cl].literals()) {
      if (gone[lit.var]) continue;  // literal already deleted
      --occ[lit.var];
      if (!lit.positive) --neg_occ[lit.var];
    }
  }

  void remove(std::size_t x) {
    for (std::size_t cl : by_pos[x])
      if (clause_alive[cl]) kill(cl);
    std::vector<std::size_t> queue;
    for (std::size_t cl : by_neg[x])
      if (clause_alive[cl] && !forced[x] && --open_body[cl] == 0) fire(cl, queue);
    gone[x] = 1;
    occ[x] = 0;
    neg_occ[x] = 0;
    propagate(queue);
  }
};

}  // namespace

NegationEquivalenceTrace horn_equiv_negation_traced(const HornFormula& f1_in,
                                                    const HornFormula& f2_in) {
  assert(f1_in.var_count() == f2_in.var_count());
  const std::size_t nvars = f1_in.var_count();
  const HornFormula f1 = without_tautologies(f1_in);
  const HornFormula f2 = without_tautologies(f2_in);
  Side s1(f1, nvars);
  Side s2(f2, nvars);
  std::size_t removals = 0;

  for (;;) {
    bool changed = false;
    for (std::size_t x = 0; x < nvars && !changed; ++x) {
      if (s1.gone[x]) continue;
      if (!s1.occurs(x) && !s2.occurs(x)) continue;
      bool remove = false;
      if (s2.entails(x)) {
        if (!s1.all_neg(x)) return {false, removals};
        remove = true;
      } else if (s2.all_neg(x)) {
        if (!s1.entails(x)) return {false, removals};
        remove = true;
      } else if (s1.entails(x)) {
        if (!s2.all_neg(x)) return {false, removals};
        remove = true;
      } else if (s1.all_neg(x)) {
        if (!s2.entails(x)) return {false, removals};
        remove = true;
      }
      if (remove) {
        s1.remove(x);
        s2.remove(x);
        ++removals;
        changed = true;
      }
    }
    if (!changed) break;
  }

  // Tautological clauses are gone, so validity is clauselessness.
  if (s1.no_clauses()) return {s2.unsat, removals};
  if (s1.unsat) return {s2.no_clauses(), removals};
  if (s2.no_clauses()) return {s1.unsat, removals};
  if (s2.unsat) return {s1.no_clauses(), removals};
  return {false, removals};
}

bool horn_equiv_negation(const HornFormula& f1, const HornFormula& f2) {
  return horn_equiv_negation_traced(f1, f2).equivalent;
}

const char* binary_redundancy_case_name(BinaryRedundancyCase c) {
  switch (c) {
    case BinaryRedundancyCase::None: return "none";
    case BinaryRedundancyCase::Inconsistent: return "inconsistent";
    case BinaryRedundancyCase::Tautological: return "tautological";
    case BinaryRedundancyCase::EquivalentToSecond: return "equivalent-to-second";
    case BinaryRedundancyCase::EquivalentToNegation: return "equivalent-to-negation";
  }
  return "";
}

BinaryRedundancyCase binary_horn_redundancy_case(const HornFormula& s1,
                                                 const HornFormula& s2) {
  if (horn_unsat(s1)) return BinaryRedundancyCase::Inconsistent;
  if (horn_is_tautological(s1)) return BinaryRedundancyCase::Tautological;
  if (horn_equivalent(s1, s2)) return BinaryRedundancyCase::EquivalentToSecond;
  if (horn_equiv_negation(s1, s2)) return BinaryRedundancyCase::EquivalentToNegation;
  return BinaryRedundancyCase::None;
}

bool binary_horn_redundant(const HornFormula& s1, const HornFormula& s2) {
  return binary_horn_redundancy_case(s1, s2) != BinaryRedundancyCase::None;
}

Formula horn_to_formula(const HornFormula& f, [[maybe_unused]] const Alphabet& alphabet) {
  assert(alphabet.size() >= f.var_count());
  std::vector<Formula> clauses;
  clauses.reserve(f.clauses().size());
  for (const HornClause& c : f.clauses()) {
    std::vector<Formula> lits;
    lits.reserve(c.literals().size());
    for (const HornLiteral& lit : c.literals()) {
      Formula v = Formula::variable(lit.var);
      lits.push_back(lit.positive ? v : Formula::negation(v));
    }
    clauses.push_back(Formula::disjunction(std::move(lits)));
  }
  return Formula::conjunction(std::move(clauses));
}

// ---------------------------------------------------------------------------
// Clause files

namespace {

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

ParsedHorn parse_horn_text(std::string_view text) {
  ParsedHorn out;
  std::set<std::string> names;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t line_start = 0;

  auto column = [&](std::size_t at) { return at - line_start + 1; };

  while (pos <= text.size()) {
    // one clause: up to ';', newline or end
    std::vector<std::pair<std::string, bool>> literals;
    bool saw_false = false;
    bool saw_literal = false;
    const std::size_t clause_line = line;
    for (;;) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
        ++pos;
      if (pos >= text.size() || text[pos] == ';' || text[pos] == '\n') break;
      if (saw_literal) {
        if (text[pos] != '|')
          throw ParseError("expected '|' between literals", line, column(pos));
        ++pos;
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
      }
      const std::size_t lit_start = pos;
      bool positive = true;
      if (pos < text.size() && text[pos] == '~') {
        positive = false;
        ++pos;
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
      }
      if (positive && text.substr(pos, 5) == "FALSE" &&
          (pos + 5 >= text.size() || !ident_char(text[pos + 5]))) {
        pos += 5;
        saw_false = true;
        saw_literal = true;
        continue;
      }
      if (pos >= text.size() || text[pos] < 'a' || text[pos] > 'z')
        throw ParseError("expected a literal", line, column(lit_start));
      const std::size_t name_start = pos;
      while (pos < text.size() && ident_char(text[pos])) ++pos;
      literals.emplace_back(std::string(text.substr(name_start, pos - name_start)),
                            positive);
      saw_literal = true;
    }

    if (saw_false && !literals.empty())
      throw ParseError("FALSE cannot be combined with literals", clause_line, 0);
    if (saw_literal) {
      std::size_t positives = 0;
      for (const auto& [name, positive] : literals)
        if (positive) ++positives;
      if (positives > 1)
        throw ParseError("clause has more than one positive literal", clause_line, 0);
      NamedHornClause clause;
      clause.literals = literals;  // empty when FALSE
      clause.line = clause_line;
      out.clauses.push_back(std::move(clause));
      for (const auto& [name, positive] : literals) names.insert(name);
    }

    if (pos >= text.size()) break;
    if (text[pos] == '\n') {
      ++line;
      line_start = pos + 1;
    }
    ++pos;
  }

  out.variables.assign(names.begin(), names.end());
  return out;
}

HornFormula bind_horn(const ParsedHorn& parsed, const Alphabet& alphabet) {
  std::vector<HornClause> clauses;
  clauses.reserve(parsed.clauses.size());
  for (const NamedHornClause& c : parsed.clauses) {
    std::vector<HornLiteral> lits;
    lits.reserve(c.literals.size());
    for (const auto& [name, positive] : c.literals) {
      auto index = alphabet.index(name);
      if (!index) throw UnknownVariableError(name, c.line, 0);
      lits.push_back({*index, positive});
    }
    clauses.push_back(HornClause(std::move(lits)));
  }
  return HornFormula(alphabet.size(), std::move(clauses));
}

}  // namespace doxa
