#include "pk/frontend/ast.hpp"

#include <algorithm>

#include "pk/frontend/error.hpp"

namespace pk::frontend {

std::string_view to_string(BinaryOp op)
{
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::IntDiv: return "div";
    case BinaryOp::Mod: return "mod";
    case BinaryOp::Eq: return "=";
    case BinaryOp::Neq: return "<>";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::And: return "and";
    case BinaryOp::Or: return "or";
    case BinaryOp::Xor: return "xor";
    case BinaryOp::Implies: return "=>";
  }
  return "?";
}

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Type: return "type error";
    case ErrorKind::MissingDefinition: return "missing definition";
    case ErrorKind::DuplicateDefinition: return "duplicate definition";
    case ErrorKind::UnknownVariable: return "unknown variable";
    case ErrorKind::UnknownNode: return "unknown node";
    case ErrorKind::Recursion: return "recursive node";
    case ErrorKind::Causality: return "instantaneous cycle";
    case ErrorKind::NoProperty: return "no property";
  }
  return "error";
}

FrontendError::FrontendError(ErrorKind kind, SourcePos pos, const std::string& message, std::vector<std::string> cycle)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
                         std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      pos_(pos),
      message_(message),
      cycle_(std::move(cycle))
{
}

Expr Expr::bool_lit(bool b, SourcePos pos)
{
  Expr e;
  e.kind = ExprKind::BoolLit;
  e.boolean = b;
  e.pos = pos;
  return e;
}

Expr Expr::int_lit(Integer n, SourcePos pos)
{
  Expr e;
  e.kind = ExprKind::IntLit;
  e.number = Rational(std::move(n));
  e.pos = pos;
  return e;
}

Expr Expr::real_lit(Rational q, SourcePos pos)
{
  Expr e;
  e.kind = ExprKind::RealLit;
  e.number = std::move(q);
  e.pos = pos;
  return e;
}

Expr Expr::variable(std::string name, SourcePos pos)
{
  Expr e;
  e.kind = ExprKind::Var;
  e.name = std::move(name);
  e.pos = pos;
  return e;
}

Expr Expr::unary_op(UnaryOp op, Expr a, SourcePos pos)
{
  Expr e;
  e.kind = ExprKind::Unary;
  e.unary = op;
  e.args.push_back(std::move(a));
  e.pos = pos;
  return e;
}

Expr Expr::binary_op(BinaryOp op, Expr a, Expr b, SourcePos pos)
{
  Expr e;
  e.kind = ExprKind::Binary;
  e.binary = op;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  e.pos = pos;
  return e;
}

Expr Expr::arrow(Expr first, Expr rest, SourcePos pos)
{
  Expr e;
  e.kind = ExprKind::Arrow;
  e.args.push_back(std::move(first));
  e.args.push_back(std::move(rest));
  e.pos = pos;
  return e;
}

Expr Expr::pre(Expr a, SourcePos pos)
{
  Expr e;
  e.kind = ExprKind::Pre;
  e.args.push_back(std::move(a));
  e.pos = pos;
  return e;
}

Expr Expr::if_then_else(Expr c, Expr t, Expr f, SourcePos pos)
{
  Expr e;
  e.kind = ExprKind::Ite;
  e.args.push_back(std::move(c));
  e.args.push_back(std::move(t));
  e.args.push_back(std::move(f));
  e.pos = pos;
  return e;
}

Expr Expr::call(std::string node, std::vector<Expr> args, SourcePos pos)
{
  Expr e;
  e.kind = ExprKind::Call;
  e.name = std::move(node);
  e.args = std::move(args);
  e.pos = pos;
  return e;
}

const VarDecl* Node::find_var(const std::string& var) const
{
  for (const auto* group : {&inputs, &outputs, &locals}) {
    for (const auto& d : *group) {
      if (d.name == var) return &d;
    }
  }
  return nullptr;
}

bool Node::is_input(const std::string& var) const
{
  return std::any_of(inputs.begin(), inputs.end(), [&](const VarDecl& d) { return d.name == var; });
}

const Node* Program::find_node(const std::string& name) const
{
  for (const auto& n : nodes) {
    if (n.name == name) return &n;
  }
  return nullptr;
}

const Node& TypedProgram::main_node() const
{
  const Node* n = program.find_node(main);
  if (!n) throw FrontendError(ErrorKind::UnknownNode, {}, "main node '" + main + "' not found");
  return *n;
}

bool same_structure(const Expr& a, const Expr& b)
{
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  switch (a.kind) {
    case ExprKind::BoolLit:
      if (a.boolean != b.boolean) return false;
      break;
    case ExprKind::IntLit:
    case ExprKind::RealLit:
      if (a.number != b.number) return false;
      break;
    case ExprKind::Var:
    case ExprKind::Call:
      if (a.name != b.name) return false;
      break;
    case ExprKind::Unary:
      if (a.unary != b.unary) return false;
      break;
    case ExprKind::Binary:
      if (a.binary != b.binary) return false;
      break;
    case ExprKind::Arrow:
    case ExprKind::Pre:
    case ExprKind::Ite:
      break;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_structure(a.args[i], b.args[i])) return false;
  }
  return true;
}

namespace {

bool same_decls(const std::vector<VarDecl>& a, const std::vector<VarDecl>& b)
{
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const VarDecl& x, const VarDecl& y) { return x.name == y.name && x.sort == y.sort; });
}

}  // namespace

bool same_structure(const Node& a, const Node& b)
{
  if (a.name != b.name || !same_decls(a.inputs, b.inputs) || !same_decls(a.outputs, b.outputs) ||
      !same_decls(a.locals, b.locals) || a.equations.size() != b.equations.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.equations.size(); ++i) {
    if (a.equations[i].lhs != b.equations[i].lhs) return false;
    if (!same_structure(a.equations[i].rhs, b.equations[i].rhs)) return false;
  }
  return true;
}

bool same_structure(const Program& a, const Program& b)
{
  if (a.nodes.size() != b.nodes.size() || a.properties.size() != b.properties.size()) return false;
  if (a.main.has_value() != b.main.has_value()) return false;
  if (a.main && a.main->name != b.main->name) return false;
  for (std::size_t i = 0; i < a.properties.size(); ++i) {
    if (a.properties[i].name != b.properties[i].name) return false;
  }
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    if (!same_structure(a.nodes[i], b.nodes[i])) return false;
  }
  return true;
}

}  // namespace pk::frontend
