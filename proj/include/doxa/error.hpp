#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace doxa {

// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad variable list: malformed identifier, duplicate, or reserved word.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Syntax error in a formula, model literal, clause file or scenario file.
// Lines and columns are one-based; column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " (line " + std::to_string(line) +
              (column > 0 ? ", column " + std::to_string(column) : "") + ")"),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// A formula mentions a variable that is not in the alphabet.
class UnknownVariableError : public ParseError {
 public:
  UnknownVariableError(const std::string& name, std::size_t line, std::size_t column)
      : ParseError("unknown variable '" + name + "'", line, column), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Model enumeration was requested over more variables than the bound allows.
class EnumerationBoundExceeded : public Error {
 public:
  EnumerationBoundExceeded(std::size_t variables, std::size_t bound)
      : Error("enumeration over " + std::to_string(variables) +
              " variables exceeds the bound of " + std::to_string(bound)),
        variables_(variables),
        bound_(bound) {}

  std::size_t variables() const { return variables_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t variables_;
  std::size_t bound_;
};

// Revision by a formula with no models.  Carries the zero-based step index
// when raised from inside a sequence, -1 otherwise.
class InconsistentRevision : public Error {
 public:
  InconsistentRevision()
      : Error("revision by an inconsistent formula"), step_(-1) {}
  explicit InconsistentRevision(std::ptrdiff_t step)
      : Error("revision by an inconsistent formula at step " + std::to_string(step)),
        step_(step) {}

  std::ptrdiff_t step() const { return step_; }

 private:
  std::ptrdiff_t step_;
};

// A sequence mixes operators beyond what a symbolic comparison supports.
class UnsupportedOperator : public Error {
 public:
  using Error::Error;
};

// An injected formula reuses a reserved gadget variable, or two injected
// formulae share a variable.
class AlphabetOverlap : public Error {
 public:
  using Error::Error;
};

// Too many formulae for selector enumeration.
class CombinationLimitExceeded : public Error {
 public:
  CombinationLimitExceeded(std::size_t formulae, std::size_t limit)
      : Error("selector enumeration over " + std::to_string(formulae) +
              " formulae exceeds the limit of " + std::to_string(limit)),
        formulae_(formulae),
        limit_(limit) {}

  std::size_t formulae() const { return formulae_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t formulae_;
  std::size_t limit_;
};

}  // namespace doxa
