#include "dlout/errors.hpp"

namespace dlout {

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            message),
      kind_(kind),
      line_(line),
      column_(column) {}

BudgetExceeded::BudgetExceeded(std::uint64_t limit)
    : Error("search budget of " + std::to_string(limit) + " nodes exceeded"), limit_(limit) {}

}  // namespace dlout
