#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pk/logic/number.hpp"
#include "pk/logic/value.hpp"

namespace pk::frontend {

using logic::Integer;
using logic::Rational;
using logic::Sort;

struct SourcePos {
  int line = 0;
  int column = 0;
};

enum class ExprKind : std::uint8_t { BoolLit, IntLit, RealLit, Var, Unary, Binary, Arrow, Pre, Ite, Call };
enum class UnaryOp : std::uint8_t { Neg, Not };
enum class BinaryOp : std::uint8_t {
  Add,
  Sub,
  Mul,
  Div,
  IntDiv,
  Mod,
  Eq,
  Neq,
  Lt,
  Le,
  Gt,
  Ge,
  And,
  Or,
  Xor,
  Implies,
};

std::string_view to_string(BinaryOp op);

/// Expression tree. `sort` is filled in by the type checker.
struct Expr {
  ExprKind kind = ExprKind::BoolLit;
  SourcePos pos;
  std::string name;  // Var and Call
  bool boolean = false;
  Rational number;
  UnaryOp unary = UnaryOp::Neg;
  BinaryOp binary = BinaryOp::Add;
  std::vector<Expr> args;
  std::optional<Sort> sort;

  static Expr bool_lit(bool b, SourcePos pos = {});
  static Expr int_lit(Integer n, SourcePos pos = {});
  static Expr real_lit(Rational q, SourcePos pos = {});
  static Expr variable(std::string name, SourcePos pos = {});
  static Expr unary_op(UnaryOp op, Expr e, SourcePos pos = {});
  static Expr binary_op(BinaryOp op, Expr a, Expr b, SourcePos pos = {});
  static Expr arrow(Expr first, Expr rest, SourcePos pos = {});
  static Expr pre(Expr e, SourcePos pos = {});
  static Expr if_then_else(Expr c, Expr t, Expr e, SourcePos pos = {});
  static Expr call(std::string node, std::vector<Expr> args, SourcePos pos = {});
};

struct VarDecl {
  std::string name;
  Sort sort = Sort::Bool;
  SourcePos pos;
};

/// `x = e;` or `(a, b) = f(...)`.
struct Equation {
  std::vector<std::string> lhs;
  Expr rhs;
  SourcePos pos;
};

struct Node {
  std::string name;
  std::vector<VarDecl> inputs;
  std::vector<VarDecl> outputs;
  std::vector<VarDecl> locals;
  std::vector<Equation> equations;
  SourcePos pos;

  const VarDecl* find_var(const std::string& var) const;
  bool is_input(const std::string& var) const;
};

struct Pragma {
  std::string name;
  SourcePos pos;
};

struct Program {
  std::vector<Node> nodes;
  /// `--%PROPERTY id;` pragmas in source order.
  std::vector<Pragma> properties;
  /// `--%MAIN id;`, last one wins.
  std::optional<Pragma> main;

  const Node* find_node(const std::string& name) const;
};

/// A type-checked program: every expression carries a sort, the main node is
/// resolved and the property list is nonempty.
struct TypedProgram {
  Program program;
  std::string main;
  std::vector<std::string> properties;

  const Node& main_node() const;
};

/// Structural equality ignoring source positions and sort annotations.
bool same_structure(const Expr& a, const Expr& b);
bool same_structure(const Node& a, const Node& b);
bool same_structure(const Program& a, const Program& b);

}  // namespace pk::frontend
