#include <fstream>
#include <sstream>

#include "pk/frontend/error.hpp"
#include "pk/frontend/frontend.hpp"
#include "pk/frontend/lexer.hpp"

namespace pk::frontend {

namespace {

class Parser {
 public:
  explicit Parser(LexResult lexed) : toks_(std::move(lexed.tokens)), pragmas_(std::move(lexed.pragmas)) {}

  Program program()
  {
    Program p;
    while (!at(TokenKind::End)) p.nodes.push_back(node());
    for (auto& pr : pragmas_) {
      if (pr.kind == PragmaToken::Kind::Property) {
        p.properties.push_back(std::move(pr.pragma));
      } else {
        p.main = std::move(pr.pragma);
      }
    }
    return p;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(TokenKind k) const { return peek().kind == k; }

  const Token& advance()
  {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  bool accept(TokenKind k)
  {
    if (!at(k)) return false;
    advance();
    return true;
  }

  [[noreturn]] void error(const Token& t, const std::string& msg)
  {
    std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw FrontendError(ErrorKind::Parse, t.pos, msg + ", found " + found);
  }

  const Token& expect(TokenKind k)
  {
    if (!at(k)) error(peek(), "expected " + std::string(to_string(k)));
    return advance();
  }

  std::string ident() { return expect(TokenKind::Ident).text; }

  Sort type()
  {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Int: advance(); return Sort::Int;
      case TokenKind::Bool: advance(); return Sort::Bool;
      case TokenKind::Real: advance(); return Sort::Real;
      default: error(t, "expected a type (int, bool, real)");
    }
  }

  // a, b : int
  void decl_group(std::vector<VarDecl>& out)
  {
    std::vector<std::pair<std::string, SourcePos>> names;
    do {
      SourcePos pos = peek().pos;
      names.emplace_back(ident(), pos);
    } while (accept(TokenKind::Comma));
    expect(TokenKind::Colon);
    Sort s = type();
    for (auto& [n, pos] : names) out.push_back({std::move(n), s, pos});
  }

  // ( [group { ; group } [;]] )
  std::vector<VarDecl> param_list()
  {
    std::vector<VarDecl> out;
    expect(TokenKind::LParen);
    while (!at(TokenKind::RParen)) {
      decl_group(out);
      if (!accept(TokenKind::Semicolon)) break;
    }
    expect(TokenKind::RParen);
    return out;
  }

  Node node()
  {
    Node n;
    n.pos = expect(TokenKind::Node).pos;
    n.name = ident();
    n.inputs = param_list();
    expect(TokenKind::Returns);
    n.outputs = param_list();
    accept(TokenKind::Semicolon);
    if (accept(TokenKind::Var)) {
      do {
        decl_group(n.locals);
        expect(TokenKind::Semicolon);
      } while (at(TokenKind::Ident));
    }
    expect(TokenKind::Let);
    while (!at(TokenKind::Tel)) {
      n.equations.push_back(equation());
      expect(TokenKind::Semicolon);
    }
    expect(TokenKind::Tel);
    if (!accept(TokenKind::Semicolon)) accept(TokenKind::Dot);
    return n;
  }

  Equation equation()
  {
    Equation eq;
    eq.pos = peek().pos;
    if (accept(TokenKind::LParen)) {
      do {
        eq.lhs.push_back(ident());
      } while (accept(TokenKind::Comma));
      expect(TokenKind::RParen);
    } else {
      do {
        eq.lhs.push_back(ident());
      } while (accept(TokenKind::Comma));
    }
    expect(TokenKind::Eq);
    eq.rhs = expr();
    return eq;
  }

  Expr expr() { return arrow(); }

  Expr arrow()
  {
    Expr lhs = implication();
    if (at(TokenKind::Arrow)) {
      SourcePos pos = advance().pos;
      return Expr::arrow(std::move(lhs), arrow(), pos);
    }
    return lhs;
  }

  Expr implication()
  {
    Expr lhs = disjunction();
    if (at(TokenKind::Implies)) {
      SourcePos pos = advance().pos;
      return Expr::binary_op(BinaryOp::Implies, std::move(lhs), implication(), pos);
    }
    return lhs;
  }

  Expr disjunction()
  {
    Expr lhs = conjunction();
    while (at(TokenKind::Or) || at(TokenKind::Xor)) {
      const Token& t = advance();
      BinaryOp op = t.kind == TokenKind::Or ? BinaryOp::Or : BinaryOp::Xor;
      lhs = Expr::binary_op(op, std::move(lhs), conjunction(), t.pos);
    }
    return lhs;
  }

  Expr conjunction()
  {
    Expr lhs = comparison();
    while (at(TokenKind::And)) {
      SourcePos pos = advance().pos;
      lhs = Expr::binary_op(BinaryOp::And, std::move(lhs), comparison(), pos);
    }
    return lhs;
  }

  Expr comparison()
  {
    Expr lhs = additive();
    BinaryOp op;
    switch (peek().kind) {
      case TokenKind::Eq: op = BinaryOp::Eq; break;
      case TokenKind::Neq: op = BinaryOp::Neq; break;
      case TokenKind::Lt: op = BinaryOp::Lt; break;
      case TokenKind::Le: op = BinaryOp::Le; break;
      case TokenKind::Gt: op = BinaryOp::Gt; break;
      case TokenKind::Ge: op = BinaryOp::Ge; break;
      default: return lhs;
    }
    SourcePos pos = advance().pos;
    return Expr::binary_op(op, std::move(lhs), additive(), pos);
  }

  Expr additive()
  {
    Expr lhs = multiplicative();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const Token& t = advance();
      BinaryOp op = t.kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Sub;
      lhs = Expr::binary_op(op, std::move(lhs), multiplicative(), t.pos);
    }
    return lhs;
  }

  Expr multiplicative()
  {
    Expr lhs = unary();
    while (true) {
      BinaryOp op;
      switch (peek().kind) {
        case TokenKind::Star: op = BinaryOp::Mul; break;
        case TokenKind::Slash: op = BinaryOp::Div; break;
        case TokenKind::Div: op = BinaryOp::IntDiv; break;
        case TokenKind::Mod: op = BinaryOp::Mod; break;
        default: return lhs;
      }
      SourcePos pos = advance().pos;
      lhs = Expr::binary_op(op, std::move(lhs), unary(), pos);
    }
  }

  Expr unary()
  {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Minus: {
        SourcePos pos = advance().pos;
        return Expr::unary_op(UnaryOp::Neg, unary(), pos);
      }
      case TokenKind::Not: {
        SourcePos pos = advance().pos;
        return Expr::unary_op(UnaryOp::Not, unary(), pos);
      }
      case TokenKind::Pre: {
        SourcePos pos = advance().pos;
        return Expr::pre(unary(), pos);
      }
      default:
        return primary();
    }
  }

  Expr primary()
  {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::True: advance(); return Expr::bool_lit(true, t.pos);
      case TokenKind::False: advance(); return Expr::bool_lit(false, t.pos);
      case TokenKind::IntLit: {
        advance();
        return Expr::int_lit(Integer(t.text), t.pos);
      }
      case TokenKind::RealLit: {
        advance();
        auto q = logic::parse_rational(t.text);
        if (!q) error(t, "malformed decimal literal");
        return Expr::real_lit(*q, t.pos);
      }
      case TokenKind::Ident: {
        std::string name = advance().text;
        if (accept(TokenKind::LParen)) {
          std::vector<Expr> args;
          if (!at(TokenKind::RParen)) {
            do {
              args.push_back(expr());
            } while (accept(TokenKind::Comma));
          }
          expect(TokenKind::RParen);
          return Expr::call(std::move(name), std::move(args), t.pos);
        }
        return Expr::variable(std::move(name), t.pos);
      }
      case TokenKind::LParen: {
        advance();
        Expr e = expr();
        expect(TokenKind::RParen);
        return e;
      }
      case TokenKind::If: {
        SourcePos pos = advance().pos;
        Expr c = expr();
        expect(TokenKind::Then);
        Expr a = expr();
        expect(TokenKind::Else);
        Expr b = expr();
        return Expr::if_then_else(std::move(c), std::move(a), std::move(b), pos);
      }
      default:
        error(t, "expected an expression");
    }
  }

  std::vector<Token> toks_;
  std::vector<PragmaToken> pragmas_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(std::string_view source) { return Parser(lex(source)).program(); }

TypedProgram elaborate(std::string_view source, const std::optional<std::string>& main_override)
{
  return inline_calls(typecheck(parse(source), main_override));
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pk::frontend
