#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dlout {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  syntax,
  df_violation,
  empty_justification,
  empty_consequent,
  reserved_letter,
};

// Raised by the theory and DIMACS readers. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
             const std::string& message);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

// A rule built through the API with an empty justification or consequent.
class InvalidRule : public Error {
 public:
  using Error::Error;
};

// The operation is not defined (or not polynomial) for the theory's fragment.
class ScopeError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t limit);
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

// Malformed outlier/witness query (overlap, emptiness, not drawn from W, ...).
class InvalidQuery : public Error {
 public:
  using Error::Error;
};

class InfeasibleProfile : public Error {
 public:
  using Error::Error;
};

// Truth-table SAT refused because the formula has too many variables.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace dlout
