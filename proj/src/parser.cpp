#include "dlout/parser.hpp"

#include <cctype>
#include <iterator>
#include <optional>
#include <string>

#include "dlout/errors.hpp"

namespace dlout {

namespace {

enum class Tok { ident, minus, amp, colon, slash, dot, comma, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token t{Tok::end, {}, line_, column_};
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) advance();
      t.kind = Tok::ident;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    switch (c) {
      case '-':
        t.kind = Tok::minus;
        break;
      case '&':
        t.kind = Tok::amp;
        break;
      case ':':
        t.kind = Tok::colon;
        break;
      case '/':
        t.kind = Tok::slash;
        break;
      case '.':
        t.kind = Tok::dot;
        break;
      case ',':
        t.kind = Tok::comma;
        break;
      case '|':
        throw ParseError(ParseErrorKind::df_violation, line_, column_,
                         "disjunction is not allowed in a disjunction-free theory");
      case '(':
      case ')':
        throw ParseError(ParseErrorKind::df_violation, line_, column_,
                         "nested formulas are not allowed; use literal conjunctions");
      default:
        throw ParseError(ParseErrorKind::syntax, line_, column_,
                         std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(1, c);
    advance();
    return t;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::ident:
      return "identifier";
    case Tok::minus:
      return "'-'";
    case Tok::amp:
      return "'&'";
    case Tok::colon:
      return "':'";
    case Tok::slash:
      return "'/'";
    case Tok::dot:
      return "'.'";
    case Tok::comma:
      return "','";
    case Tok::end:
      return "end of input";
  }
  return "token";
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : lexer_(text), options_(options) {
    current_ = lexer_.next();
  }

  DefaultTheory theory() {
    DefaultTheory out;
    while (current_.kind != Tok::end) {
      if (current_.kind != Tok::ident ||
          (current_.text != "fact" && current_.text != "default")) {
        fail(ParseErrorKind::syntax, "expected 'fact' or 'default', found " + found());
      }
      if (current_.text == "fact") {
        shift();
        for (auto& l : conjunction()) out.add_fact(l);
        expect(Tok::dot);
      } else {
        shift();
        LiteralSet prerequisite;
        if (current_.kind != Tok::colon) prerequisite = conjunction();
        expect(Tok::colon);
        if (current_.kind == Tok::slash) {
          fail(ParseErrorKind::empty_justification, "default has an empty justification");
        }
        LiteralSet justification = conjunction();
        expect(Tok::slash);
        if (current_.kind == Tok::dot) {
          fail(ParseErrorKind::empty_consequent, "default has an empty consequent");
        }
        LiteralSet consequent = conjunction();
        expect(Tok::dot);
        out.add_default(DefaultRule(std::move(prerequisite), std::move(justification),
                                    std::move(consequent)));
      }
    }
    return out;
  }

  Literal literal() {
    bool negative = false;
    if (current_.kind == Tok::minus) {
      negative = true;
      shift();
    }
    if (current_.kind != Tok::ident) fail(ParseErrorKind::syntax, "expected a letter, found " + found());
    if (options_.reject_reserved_letters && is_reserved_letter(current_.text)) {
      fail(ParseErrorKind::reserved_letter,
           "letter '" + current_.text + "' uses a prefix reserved for generated theories");
    }
    Literal out(current_.text, negative);
    shift();
    return out;
  }

  LiteralSet list() {
    LiteralSet out;
    if (current_.kind == Tok::end) return out;
    out.insert(literal());
    while (current_.kind == Tok::comma) {
      shift();
      out.insert(literal());
    }
    expect(Tok::end);
    return out;
  }

  void expect_end() { expect(Tok::end); }

 private:
  LiteralSet conjunction() {
    LiteralSet out;
    out.insert(literal());
    while (current_.kind == Tok::amp) {
      shift();
      out.insert(literal());
    }
    return out;
  }

  void expect(Tok kind) {
    if (current_.kind != kind) {
      fail(ParseErrorKind::syntax,
           "expected " + std::string(describe(kind)) + ", found " + found());
    }
    shift();
  }

  std::string found() const {
    if (current_.kind == Tok::ident) return "'" + current_.text + "'";
    return std::string(describe(current_.kind));
  }

  [[noreturn]] void fail(ParseErrorKind kind, const std::string& message) const {
    throw ParseError(kind, current_.line, current_.column, message);
  }

  void shift() { current_ = lexer_.next(); }

  Lexer lexer_;
  ParseOptions options_;
  Token current_;
};

}  // namespace

DefaultTheory parse_theory(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).theory();
}

DefaultTheory parse_theory(std::istream& in, const ParseOptions& options) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_theory(text, options);
}

Literal parse_literal(std::string_view text) {
  Parser parser(text, {});
  Literal out = parser.literal();
  parser.expect_end();
  return out;
}

LiteralSet parse_literal_list(std::string_view text) { return Parser(text, {}).list(); }

bool is_reserved_letter(std::string_view letter) {
  for (std::string_view prefix : {"_y", "_c", "_l", "_f"}) {
    if (letter.substr(0, prefix.size()) == prefix) return true;
  }
  return false;
}

}  // namespace dlout
