// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/parser.hpp"

#include "pearlsat/errors.hpp"

#include <cctype>
#include <string>

namespace pearlsat {
namespace {

enum class Tok {
  Ident,
  Zero,
  One,
  Minus,
  Star,
  Plus,
  Xor,
  Iff,
  Ite,
  LParen,
  RParen,
  Comma,
  End,
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

const char *describe(Tok t) {
  switch (t) {
  case Tok::Ident: return "variable";
  case Tok::Zero:
  case Tok::One: return "constant";
  case Tok::Minus: return "'-'";
  case Tok::Star: return "'*'";
  case Tok::Plus: return "'+'";
  case Tok::Xor: return "'xor'";
  case Tok::Iff: return "'=='";
  case Tok::Ite: return "'ite'";
  case Tok::LParen: return "'('";
  case Tok::RParen: return "')'";
  case Tok::Comma: return "','";
  case Tok::End: return "end of input";
  }
  return "token";
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
public:
  Lexer(std::string_view text, std::size_t first_line)
      : text_(text), line_(first_line), end_line_(first_line) {}

  Token next() {
    Token t = scan();
    if (t.kind != Tok::End) {
      end_line_ = line_;
      end_column_ = pos_ - line_start_ + 1;
    }
    return t;
  }

private:
  Token scan() {
    skip_blank();
    std::size_t col = pos_ - line_start_ + 1;
    // End of input is reported right after the last token.
    if (pos_ >= text_.size())
      return {Tok::End, {}, end_line_, end_column_};

    char c = text_[pos_];
    auto single = [&](Tok kind) {
      Token t{kind, text_.substr(pos_, 1), line_, col};
      ++pos_;
      return t;
    };
    switch (c) {
    case '-': return single(Tok::Minus);
    case '*': return single(Tok::Star);
    case '+': return single(Tok::Plus);
    case '(': return single(Tok::LParen);
    case ')': return single(Tok::RParen);
    case ',': return single(Tok::Comma);
    case '=':
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
        Token t{Tok::Iff, text_.substr(pos_, 2), line_, col};
        pos_ += 2;
        return t;
      }
      throw ParseError("expected '==', found a single '='", line_, col);
    default:
      break;
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && ident_char(text_[end]))
        ++end;
      auto word = text_.substr(pos_, end - pos_);
      if (word != "0" && word != "1")
        throw ParseError("invalid constant '" + std::string(word) +
                             "' (only 0 and 1 are allowed)",
                         line_, col);
      pos_ = end;
      return {word == "0" ? Tok::Zero : Tok::One, word, line_, col};
    }

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() && ident_char(text_[end]))
        ++end;
      auto word = text_.substr(pos_, end - pos_);
      pos_ = end;
      if (word == "xor")
        return {Tok::Xor, word, line_, col};
      if (word == "ite")
        return {Tok::Ite, word, line_, col};
      if (!std::islower(static_cast<unsigned char>(word.front())))
        throw ParseError("variable '" + std::string(word) +
                             "' must start with a lowercase letter",
                         line_, col);
      return {Tok::Ident, word, line_, col};
    }

    throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        line_start_ = pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t line_start_ = 0;
  std::size_t end_line_;
  std::size_t end_column_ = 1;
};

// Precedence climbing over the fixed table; each level is a left fold.
class Parser {
public:
  Parser(std::string_view text, VarPool &pool, std::size_t first_line)
      : lexer_(text, first_line), pool_(pool) {
    advance();
  }

  Formula parse_all() {
    Formula f = parse_iff();
    if (tok_.kind != Tok::End)
      unexpected("end of input");
    return f;
  }

private:
  void advance() { tok_ = lexer_.next(); }

  [[noreturn]] void unexpected(const char *wanted) const {
    std::string msg = std::string("expected ") + wanted + ", found " +
                      describe(tok_.kind);
    if (tok_.kind == Tok::Ident)
      msg += " '" + std::string(tok_.text) + "'";
    throw ParseError(msg, tok_.line, tok_.column);
  }

  void expect(Tok kind) {
    if (tok_.kind != kind)
      unexpected(describe(kind));
    advance();
  }

  Formula parse_iff() {
    Formula lhs = parse_xor();
    while (tok_.kind == Tok::Iff) {
      advance();
      lhs = iff(std::move(lhs), parse_xor());
    }
    return lhs;
  }

  Formula parse_xor() {
    Formula lhs = parse_or();
    while (tok_.kind == Tok::Xor) {
      advance();
      lhs = xor_of(std::move(lhs), parse_or());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (tok_.kind == Tok::Plus) {
      advance();
      lhs = std::move(lhs) + parse_and();
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (tok_.kind == Tok::Star) {
      advance();
      lhs = std::move(lhs) * parse_unary();
    }
    return lhs;
  }

  Formula parse_unary() {
    if (tok_.kind == Tok::Minus) {
      advance();
      return -parse_unary();
    }
    return parse_primary();
  }

  Formula parse_primary() {
    switch (tok_.kind) {
    case Tok::Zero:
      advance();
      return Formula::constant(false);
    case Tok::One:
      advance();
      return Formula::constant(true);
    case Tok::Ident: {
      VarId v = pool_.intern(tok_.text);
      advance();
      return Formula::var(v);
    }
    case Tok::LParen: {
      advance();
      Formula inner = parse_iff();
      expect(Tok::RParen);
      return inner;
    }
    case Tok::Ite: {
      Token at = tok_;
      advance();
      if (tok_.kind != Tok::LParen)
        throw ParseError("'ite' is reserved and cannot name a variable",
                         at.line, at.column);
      advance();
      Formula c = parse_iff();
      expect(Tok::Comma);
      Formula t = parse_iff();
      expect(Tok::Comma);
      Formula e = parse_iff();
      expect(Tok::RParen);
      return ite(std::move(c), std::move(t), std::move(e));
    }
    case Tok::Xor:
      throw ParseError("'xor' is reserved and cannot name a variable",
                       tok_.line, tok_.column);
    default:
      unexpected("a formula");
    }
  }

  Lexer lexer_;
  VarPool &pool_;
  Token tok_{Tok::End, {}, 0, 0};
};

bool blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#')
      return true;
    if (!std::isspace(static_cast<unsigned char>(c)))
      return false;
  }
  return true;
}

} // namespace

Formula parse_formula(std::string_view text, VarPool &pool) {
  return Parser(text, pool, 1).parse_all();
}

std::vector<Formula> parse_formula_lines(std::string_view text, VarPool &pool) {
  std::vector<Formula> out;
  std::size_t line_no = 1;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!blank_or_comment(line))
      out.push_back(Parser(line, pool, line_no).parse_all());
    if (nl == std::string_view::npos)
      break;
    text.remove_prefix(nl + 1);
    ++line_no;
  }
  return out;
}

} // namespace pearlsat
