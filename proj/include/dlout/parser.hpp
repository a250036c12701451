#pragma once

#include <istream>
#include <string_view>

#include "dlout/literal.hpp"
#include "dlout/theory.hpp"

namespace dlout {

struct ParseOptions {
  // Reject letters starting with the prefixes the reduction generators use
  // (_y, _c, _l, _f).
  bool reject_reserved_letters = false;
};

// Grammar:
//   theory   := stmt*
//   stmt     := "fact" lit_conj "." | "default" [lit_conj] ":" lit_conj "/" lit_conj "."
//   lit_conj := lit ("&" lit)*
//   lit      := ["-"] IDENT
// "%" starts a comment that runs to the end of the line.
DefaultTheory parse_theory(std::string_view text, const ParseOptions& options = {});
DefaultTheory parse_theory(std::istream& in, const ParseOptions& options = {});

// "a" or "-a". Throws ParseError on anything else.
Literal parse_literal(std::string_view text);
// Comma-separated literal list, e.g. "-MfC,QuietTime". Whitespace is ignored.
LiteralSet parse_literal_list(std::string_view text);

bool is_reserved_letter(std::string_view letter);

}  // namespace dlout
