#include "pk/frontend/lexer.hpp"

#include <cctype>
#include <unordered_map>

#include "pk/frontend/error.hpp"

namespace pk::frontend {

std::string_view to_string(TokenKind kind)
{
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::IntLit: return "integer literal";
    case TokenKind::RealLit: return "decimal literal";
    case TokenKind::Node: return "'node'";
    case TokenKind::Returns: return "'returns'";
    case TokenKind::Var: return "'var'";
    case TokenKind::Let: return "'let'";
    case TokenKind::Tel: return "'tel'";
    case TokenKind::If: return "'if'";
    case TokenKind::Then: return "'then'";
    case TokenKind::Else: return "'else'";
    case TokenKind::Pre: return "'pre'";
    case TokenKind::True: return "'true'";
    case TokenKind::False: return "'false'";
    case TokenKind::And: return "'and'";
    case TokenKind::Or: return "'or'";
    case TokenKind::Not: return "'not'";
    case TokenKind::Xor: return "'xor'";
    case TokenKind::Div: return "'div'";
    case TokenKind::Mod: return "'mod'";
    case TokenKind::Int: return "'int'";
    case TokenKind::Bool: return "'bool'";
    case TokenKind::Real: return "'real'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Eq: return "'='";
    case TokenKind::Neq: return "'<>'";
    case TokenKind::Lt: return "'<'";
    case TokenKind::Le: return "'<='";
    case TokenKind::Gt: return "'>'";
    case TokenKind::Ge: return "'>='";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::Implies: return "'=>'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

namespace {

const std::unordered_map<std::string_view, TokenKind>& keywords()
{
  static const std::unordered_map<std::string_view, TokenKind> table = {
      {"node", TokenKind::Node},   {"returns", TokenKind::Returns}, {"var", TokenKind::Var},
      {"let", TokenKind::Let},     {"tel", TokenKind::Tel},         {"if", TokenKind::If},
      {"then", TokenKind::Then},   {"else", TokenKind::Else},       {"pre", TokenKind::Pre},
      {"true", TokenKind::True},   {"false", TokenKind::False},     {"and", TokenKind::And},
      {"or", TokenKind::Or},       {"not", TokenKind::Not},         {"xor", TokenKind::Xor},
      {"div", TokenKind::Div},     {"mod", TokenKind::Mod},         {"int", TokenKind::Int},
      {"bool", TokenKind::Bool},   {"real", TokenKind::Real},
  };
  return table;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run()
  {
    LexResult out;
    while (true) {
      skip_space();
      if (at_end()) break;
      SourcePos pos = here();
      char c = peek();
      if (c == '-' && peek(1) == '-') {
        comment(out);
        continue;
      }
      if (ident_start(c)) {
        std::string word;
        while (!at_end() && ident_char(peek())) word += advance();
        auto it = keywords().find(word);
        out.tokens.push_back({it == keywords().end() ? TokenKind::Ident : it->second, word, pos});
        continue;
      }
      if (digit(c)) {
        std::string num;
        while (!at_end() && digit(peek())) num += advance();
        if (peek() == '.' && digit(peek(1))) {
          num += advance();
          while (!at_end() && digit(peek())) num += advance();
          out.tokens.push_back({TokenKind::RealLit, num, pos});
        } else {
          out.tokens.push_back({TokenKind::IntLit, num, pos});
        }
        continue;
      }
      out.tokens.push_back(symbol(pos));
    }
    out.tokens.push_back({TokenKind::End, "", here()});
    return out;
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t k = 0) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }
  SourcePos here() const { return {line_, col_}; }

  char advance()
  {
    char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void error(SourcePos pos, const std::string& msg) { throw FrontendError(ErrorKind::Parse, pos, msg); }

  // `-- text` to end of line; `--%PROPERTY id;` and `--%MAIN id;` are pragmas.
  void comment(LexResult& out)
  {
    SourcePos pos = here();
    std::string line;
    while (!at_end() && peek() != '\n') line += advance();
    std::string_view body(line);
    body.remove_prefix(2);
    PragmaToken::Kind kind;
    if (body.starts_with("%PROPERTY")) {
      kind = PragmaToken::Kind::Property;
      body.remove_prefix(9);
    } else if (body.starts_with("%MAIN")) {
      kind = PragmaToken::Kind::Main;
      body.remove_prefix(5);
    } else {
      return;
    }
    std::size_t k = 0;
    while (k < body.size() && std::isspace(static_cast<unsigned char>(body[k]))) ++k;
    std::size_t start = k;
    if (k >= body.size() || !ident_start(body[k])) error(pos, "pragma expects an identifier");
    while (k < body.size() && ident_char(body[k])) ++k;
    std::string name(body.substr(start, k - start));
    while (k < body.size() && std::isspace(static_cast<unsigned char>(body[k]))) ++k;
    if (k >= body.size() || body[k] != ';') error(pos, "pragma must end with ';'");
    out.pragmas.push_back({kind, Pragma{std::move(name), pos}});
  }

  Token symbol(SourcePos pos)
  {
    char c = advance();
    auto two = [&](char next, TokenKind yes, TokenKind no, const char* yes_text, const char* no_text) {
      if (peek() == next) {
        advance();
        return Token{yes, yes_text, pos};
      }
      return Token{no, no_text, pos};
    };
    switch (c) {
      case '(': return {TokenKind::LParen, "(", pos};
      case ')': return {TokenKind::RParen, ")", pos};
      case ',': return {TokenKind::Comma, ",", pos};
      case ';': return {TokenKind::Semicolon, ";", pos};
      case ':': return {TokenKind::Colon, ":", pos};
      case '.': return {TokenKind::Dot, ".", pos};
      case '+': return {TokenKind::Plus, "+", pos};
      case '*': return {TokenKind::Star, "*", pos};
      case '/': return {TokenKind::Slash, "/", pos};
      case '-': return two('>', TokenKind::Arrow, TokenKind::Minus, "->", "-");
      case '=': return two('>', TokenKind::Implies, TokenKind::Eq, "=>", "=");
      case '>': return two('=', TokenKind::Ge, TokenKind::Gt, ">=", ">");
      case '<':
        if (peek() == '>') {
          advance();
          return {TokenKind::Neq, "<>", pos};
        }
        return two('=', TokenKind::Le, TokenKind::Lt, "<=", "<");
      default:
        break;
    }
    std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : "\\x" + std::to_string(c);
    error(pos, "unexpected character '" + shown + "'");
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

LexResult lex(std::string_view source) { return Lexer(source).run(); }

}  // namespace pk::frontend
