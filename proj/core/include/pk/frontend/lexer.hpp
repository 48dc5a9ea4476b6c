#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pk/frontend/ast.hpp"

namespace pk::frontend {

enum class TokenKind : std::uint8_t {
  Ident,
  IntLit,
  RealLit,
  // keywords
  Node,
  Returns,
  Var,
  Let,
  Tel,
  If,
  Then,
  Else,
  Pre,
  True,
  False,
  And,
  Or,
  Not,
  Xor,
  Div,
  Mod,
  Int,
  Bool,
  Real,
  // punctuation and operators
  LParen,
  RParen,
  Comma,
  Semicolon,
  Colon,
  Dot,
  Eq,
  Neq,
  Lt,
  Le,
  Gt,
  Ge,
  Arrow,
  Implies,
  Plus,
  Minus,
  Star,
  Slash,
  End,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePos pos;
};

struct PragmaToken {
  enum class Kind { Property, Main } kind = Kind::Property;
  Pragma pragma;
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by End
  std::vector<PragmaToken> pragmas;
};

/// Splits source text into tokens. `--` comments are dropped except the
/// `--%PROPERTY id;` and `--%MAIN id;` pragmas, which are collected. Throws
/// FrontendError(Parse) on characters outside the grammar (including `$`).
LexResult lex(std::string_view source);

}  // namespace pk::frontend
