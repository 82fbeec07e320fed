#include "doxa/formula.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <set>
#include <utility>

#include "doxa/error.hpp"

namespace doxa {

struct Formula::Node {
  Kind kind;
  bool value = false;        // Constant
  std::size_t var = 0;       // Variable
  std::vector<Formula> children;
};

Formula Formula::constant(bool value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Constant;
  node->value = value;
  return Formula(std::move(node));
}

Formula Formula::variable(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Variable;
  node->var = index;
  return Formula(std::move(node));
}

Formula Formula::negation(Formula f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Negation;
  node->children.push_back(std::move(f));
  return Formula(std::move(node));
}

Formula Formula::conjunction(std::vector<Formula> children) {
  if (children.empty()) return constant(true);
  if (children.size() == 1) return children.front();
  auto node = std::make_shared<Node>();
  node->kind = Kind::Conjunction;
  node->children = std::move(children);
  return Formula(std::move(node));
}

Formula Formula::disjunction(std::vector<Formula> children) {
  if (children.empty()) return constant(false);
  if (children.size() == 1) return children.front();
  auto node = std::make_shared<Node>();
  node->kind = Kind::Disjunction;
  node->children = std::move(children);
  return Formula(std::move(node));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Implication;
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Formula(std::move(node));
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Equivalence;
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Formula(std::move(node));
}

Formula::Kind Formula::kind() const { return node_->kind; }
bool Formula::constant_value() const {
  assert(node_->kind == Kind::Constant);
  return node_->value;
}
std::size_t Formula::variable_index() const {
  assert(node_->kind == Kind::Variable);
  return node_->var;
}
const std::vector<Formula>& Formula::children() const { return node_->children; }

bool evaluate(const Formula& f, const Model& m) {
  switch (f.kind()) {
    case Formula::Kind::Constant:
      return f.constant_value();
    case Formula::Kind::Variable:
      return m.test(f.variable_index());
    case Formula::Kind::Negation:
      return !evaluate(f.children()[0], m);
    case Formula::Kind::Conjunction:
      for (const Formula& c : f.children())
        if (!evaluate(c, m)) return false;
      return true;
    case Formula::Kind::Disjunction:
      for (const Formula& c : f.children())
        if (evaluate(c, m)) return true;
      return false;
    case Formula::Kind::Implication:
      return !evaluate(f.children()[0], m) || evaluate(f.children()[1], m);
    case Formula::Kind::Equivalence:
      return evaluate(f.children()[0], m) == evaluate(f.children()[1], m);
  }
  return false;  // unreachable
}

// ---------------------------------------------------------------------------
// Enumeration.  A formula over n variables is evaluated over all 2^n
// assignments at once, 64 per word: bit b of word w is the truth value under
// the assignment with code w*64+b.

namespace {

using Mask = std::vector<std::uint64_t>;

std::size_t mask_words(int width) {
  const std::uint64_t bits = std::uint64_t{1} << width;
  return static_cast<std::size_t>((bits + 63) / 64);
}

std::uint64_t tail_bits(int width) {
  const std::uint64_t bits = std::uint64_t{1} << width;
  const std::uint64_t rem = bits % 64;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

Mask variable_mask(std::size_t var, int width) {
  Mask m(mask_words(width), 0);
  if (var < 6) {
    // within one word the assignment code is the bit position
    static constexpr std::uint64_t kPattern[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    std::fill(m.begin(), m.end(), kPattern[var]);
  } else {
    for (std::size_t w = 0; w < m.size(); ++w)
      if ((w >> (var - 6)) & 1) m[w] = ~std::uint64_t{0};
  }
  m.back() &= tail_bits(width);
  return m;
}

Mask eval_mask(const Formula& f, int width) {
  switch (f.kind()) {
    case Formula::Kind::Constant: {
      Mask m(mask_words(width), f.constant_value() ? ~std::uint64_t{0} : 0);
      m.back() &= tail_bits(width);
      return m;
    }
    case Formula::Kind::Variable:
      return variable_mask(f.variable_index(), width);
    case Formula::Kind::Negation: {
      Mask m = eval_mask(f.children()[0], width);
      for (auto& w : m) w = ~w;
      m.back() &= tail_bits(width);
      return m;
    }
    case Formula::Kind::Conjunction: {
      Mask m = eval_mask(f.children()[0], width);
      for (std::size_t i = 1; i < f.children().size(); ++i) {
        Mask c = eval_mask(f.children()[i], width);
        for (std::size_t w = 0; w < m.size(); ++w) m[w] &= c[w];
      }
      return m;
    }
    case Formula::Kind::Disjunction: {
      Mask m = eval_mask(f.children()[0], width);
      for (std::size_t i = 1; i < f.children().size(); ++i) {
        Mask c = eval_mask(f.children()[i], width);
        for (std::size_t w = 0; w < m.size(); ++w) m[w] |= c[w];
      }
      return m;
    }
    case Formula::Kind::Implication: {
      Mask a = eval_mask(f.children()[0], width);
      Mask b = eval_mask(f.children()[1], width);
      for (std::size_t w = 0; w < a.size(); ++w) a[w] = ~a[w] | b[w];
      a.back() &= tail_bits(width);
      return a;
    }
    case Formula::Kind::Equivalence: {
      Mask a = eval_mask(f.children()[0], width);
      Mask b = eval_mask(f.children()[1], width);
      for (std::size_t w = 0; w < a.size(); ++w) a[w] = ~(a[w] ^ b[w]);
      a.back() &= tail_bits(width);
      return a;
    }
  }
  return {};  // unreachable
}

int checked_width(const Alphabet& alphabet, std::size_t enum_bound) {
  if (alphabet.size() > enum_bound)
    throw EnumerationBoundExceeded(alphabet.size(), enum_bound);
  return static_cast<int>(alphabet.size());
}

}  // namespace

ModelSet models(const Formula& f, const Alphabet& alphabet, std::size_t enum_bound) {
  const int width = checked_width(alphabet, enum_bound);
  const Mask m = eval_mask(f, width);
  std::vector<std::uint32_t> codes;
  for (std::size_t w = 0; w < m.size(); ++w) {
    std::uint64_t word = m[w];
    while (word) {
      const int b = std::countr_zero(word);
      codes.push_back(static_cast<std::uint32_t>(w * 64 + b));
      word &= word - 1;
    }
  }
  return ModelSet(width, std::move(codes));
}

bool is_valid(const Formula& f, const Alphabet& alphabet, std::size_t enum_bound) {
  const int width = checked_width(alphabet, enum_bound);
  Mask m = eval_mask(f, width);
  for (std::size_t w = 0; w + 1 < m.size(); ++w)
    if (m[w] != ~std::uint64_t{0}) return false;
  return m.back() == tail_bits(width);
}

bool is_unsat(const Formula& f, const Alphabet& alphabet, std::size_t enum_bound) {
  const int width = checked_width(alphabet, enum_bound);
  for (std::uint64_t w : eval_mask(f, width))
    if (w != 0) return false;
  return true;
}

bool entails(const Formula& f, const Formula& g, const Alphabet& alphabet,
             std::size_t enum_bound) {
  const int width = checked_width(alphabet, enum_bound);
  const Mask a = eval_mask(f, width);
  const Mask b = eval_mask(g, width);
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

bool equivalent(const Formula& f, const Formula& g, const Alphabet& alphabet,
                std::size_t enum_bound) {
  const int width = checked_width(alphabet, enum_bound);
  return eval_mask(f, width) == eval_mask(g, width);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { End, LParen, RParen, Not, And, Or, Implies, Iff, Ident, True, False };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return token_; }

  Token take() {
    Token t = token_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
            text_[pos_] == '\n')) {
      if (text_[pos_] == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
      }
      ++pos_;
    }
    const std::size_t col = pos_ - line_start_ + 1;
    if (pos_ >= text_.size()) {
      token_ = {Tok::End, "", line_, col};
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '(': token_ = {Tok::LParen, "(", line_, col}; ++pos_; return;
      case ')': token_ = {Tok::RParen, ")", line_, col}; ++pos_; return;
      case '~': token_ = {Tok::Not, "~", line_, col}; ++pos_; return;
      case '&': token_ = {Tok::And, "&", line_, col}; ++pos_; return;
      case '|': token_ = {Tok::Or, "|", line_, col}; ++pos_; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          token_ = {Tok::Implies, "->", line_, col};
          pos_ += 2;
          return;
        }
        throw ParseError("stray '-'", line_, col);
      case '<':
        if (text_.substr(pos_, 3) == "<->") {
          token_ = {Tok::Iff, "<->", line_, col};
          pos_ += 3;
          return;
        }
        throw ParseError("stray '<'", line_, col);
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
              (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_'))
        ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word == "true") {
        token_ = {Tok::True, word, line_, col};
      } else if (word == "false") {
        token_ = {Tok::False, word, line_, col};
      } else {
        token_ = {Tok::Ident, word, line_, col};
      }
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  Token token_{Tok::End, "", 1, 1};
};

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet)
      : lexer_(text), alphabet_(alphabet) {}

  Formula parse() {
    Formula f = equiv();
    const Token& t = lexer_.peek();
    if (t.kind != Tok::End)
      throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
    return f;
  }

 private:
  Formula equiv() {
    Formula lhs = impl();
    while (lexer_.peek().kind == Tok::Iff) {
      lexer_.take();
      lhs = Formula::equivalence(std::move(lhs), impl());
    }
    return lhs;
  }

  Formula impl() {
    Formula lhs = disj();
    if (lexer_.peek().kind == Tok::Implies) {
      lexer_.take();
      return Formula::implication(std::move(lhs), impl());
    }
    return lhs;
  }

  Formula disj() {
    std::vector<Formula> parts;
    parts.push_back(conj());
    while (lexer_.peek().kind == Tok::Or) {
      lexer_.take();
      parts.push_back(conj());
    }
    return Formula::disjunction(std::move(parts));
  }

  Formula conj() {
    std::vector<Formula> parts;
    parts.push_back(neg());
    while (lexer_.peek().kind == Tok::And) {
      lexer_.take();
      parts.push_back(neg());
    }
    return Formula::conjunction(std::move(parts));
  }

  Formula neg() {
    if (lexer_.peek().kind == Tok::Not) {
      lexer_.take();
      return Formula::negation(neg());
    }
    return atom();
  }

  Formula atom() {
    Token t = lexer_.take();
    switch (t.kind) {
      case Tok::True:
        return Formula::constant(true);
      case Tok::False:
        return Formula::constant(false);
      case Tok::Ident: {
        auto index = alphabet_.index(t.text);
        if (!index) throw UnknownVariableError(t.text, t.line, t.column);
        return Formula::variable(*index);
      }
      case Tok::LParen: {
        Formula f = equiv();
        const Token& close = lexer_.peek();
        if (close.kind != Tok::RParen)
          throw ParseError("expected ')'", close.line, close.column);
        lexer_.take();
        return f;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.line, t.column);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
    }
  }

  Lexer lexer_;
  const Alphabet& alphabet_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// binding strength; higher binds tighter
int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Equivalence: return 1;
    case Formula::Kind::Implication: return 2;
    case Formula::Kind::Disjunction: return 3;
    case Formula::Kind::Conjunction: return 4;
    case Formula::Kind::Negation: return 5;
    default: return 6;
  }
}

void print(const Formula& f, int min_prec, const Alphabet& alphabet, std::string& out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < min_prec;
  if (parens) out += "(";
  switch (f.kind()) {
    case Formula::Kind::Constant:
      out += f.constant_value() ? "true" : "false";
      break;
    case Formula::Kind::Variable:
      out += alphabet.name(f.variable_index());
      break;
    case Formula::Kind::Negation:
      out += "~";
      print(f.children()[0], 5, alphabet, out);
      break;
    case Formula::Kind::Conjunction:
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i > 0) out += " & ";
        print(f.children()[i], 4, alphabet, out);
      }
      break;
    case Formula::Kind::Disjunction:
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i > 0) out += " | ";
        print(f.children()[i], 3, alphabet, out);
      }
      break;
    case Formula::Kind::Implication:
      print(f.children()[0], 3, alphabet, out);  // right-associative
      out += " -> ";
      print(f.children()[1], 2, alphabet, out);
      break;
    case Formula::Kind::Equivalence:
      print(f.children()[0], 1, alphabet, out);  // left-associative
      out += " <-> ";
      print(f.children()[1], 2, alphabet, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string to_string(const Formula& f, const Alphabet& alphabet) {
  std::string out;
  print(f, 0, alphabet, out);
  return out;
}

std::vector<std::string> collect_identifiers(std::string_view text) {
  std::set<std::string> names;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] >= 'a' && text[pos] <= 'z') {
      std::size_t start = pos;
      while (pos < text.size() &&
             ((text[pos] >= 'a' && text[pos] <= 'z') ||
              (text[pos] >= '0' && text[pos] <= '9') || text[pos] == '_'))
        ++pos;
      std::string word(text.substr(start, pos - start));
      if (word != "true" && word != "false") names.insert(std::move(word));
    } else {
      ++pos;
    }
  }
  return std::vector<std::string>(names.begin(), names.end());
}

namespace {

void collect_variables(const Formula& f, std::set<std::size_t>& out) {
  if (f.kind() == Formula::Kind::Variable) {
    out.insert(f.variable_index());
    return;
  }
  for (const Formula& c : f.children()) collect_variables(c, out);
}

}  // namespace

std::vector<std::size_t> variables_of(const Formula& f) {
  std::set<std::size_t> vars;
  collect_variables(f, vars);
  return std::vector<std::size_t>(vars.begin(), vars.end());
}

Formula reindex(const Formula& f, const Alphabet& from, const Alphabet& to) {
  switch (f.kind()) {
    case Formula::Kind::Constant:
      return f;
    case Formula::Kind::Variable: {
      const std::string& name = from.name(f.variable_index());
      auto index = to.index(name);
      if (!index) throw AlphabetError("variable '" + name + "' not in target alphabet");
      return Formula::variable(*index);
    }
    case Formula::Kind::Negation:
      return Formula::negation(reindex(f.children()[0], from, to));
    case Formula::Kind::Conjunction:
    case Formula::Kind::Disjunction: {
      std::vector<Formula> children;
      children.reserve(f.children().size());
      for (const Formula& c : f.children()) children.push_back(reindex(c, from, to));
      return f.kind() == Formula::Kind::Conjunction
                 ? Formula::conjunction(std::move(children))
                 : Formula::disjunction(std::move(children));
    }
    case Formula::Kind::Implication:
      return Formula::implication(reindex(f.children()[0], from, to),
                                  reindex(f.children()[1], from, to));
    case Formula::Kind::Equivalence:
      return Formula::equivalence(reindex(f.children()[0], from, to),
                                  reindex(f.children()[1], from, to));
  }
  return f;  // unreachable
}

}  // namespace doxa
