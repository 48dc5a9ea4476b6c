#include <algorithm>
#include <map>
#include <set>

#include "pk/frontend/frontend.hpp"

namespace pk::frontend {

namespace {

const char* sort_name(Sort s)
{
  switch (s) {
    case Sort::Bool: return "bool";
    case Sort::Int: return "int";
    case Sort::Real: return "real";
  }
  return "?";
}

/// Value of an expression built only from numeric literals and + - * /.
std::optional<Rational> constant_value(const Expr& e)
{
  switch (e.kind) {
    case ExprKind::IntLit:
    case ExprKind::RealLit:
      return e.number;
    case ExprKind::Unary:
      if (e.unary == UnaryOp::Neg) {
        if (auto v = constant_value(e.args[0])) return -*v;
      }
      return std::nullopt;
    case ExprKind::Binary: {
      if (e.binary != BinaryOp::Add && e.binary != BinaryOp::Sub && e.binary != BinaryOp::Mul &&
          e.binary != BinaryOp::Div) {
        return std::nullopt;
      }
      auto a = constant_value(e.args[0]);
      auto b = constant_value(e.args[1]);
      if (!a || !b) return std::nullopt;
      switch (e.binary) {
        case BinaryOp::Add: return *a + *b;
        case BinaryOp::Sub: return *a - *b;
        case BinaryOp::Mul: return *a * *b;
        default:
          if (*b == 0) return std::nullopt;
          return *a / *b;
      }
    }
    default:
      return std::nullopt;
  }
}

class Checker {
 public:
  explicit Checker(Program& program) : program_(program) {}

  void check_all()
  {
    std::set<std::string> names;
    for (const auto& n : program_.nodes) {
      if (!names.insert(n.name).second) {
        throw FrontendError(ErrorKind::DuplicateDefinition, n.pos, "node '" + n.name + "' is declared twice");
      }
    }
    for (auto& n : program_.nodes) check_node(n);
  }

 private:
  [[noreturn]] void type_error(const Expr& e, const std::string& msg)
  {
    throw FrontendError(ErrorKind::Type, e.pos, msg + " in '" + print(e) + "'");
  }

  void check_node(Node& node)
  {
    std::set<std::string> declared;
    for (const auto* group : {&node.inputs, &node.outputs, &node.locals}) {
      for (const auto& d : *group) {
        if (!declared.insert(d.name).second) {
          throw FrontendError(ErrorKind::DuplicateDefinition, d.pos,
                              "variable '" + d.name + "' is declared twice in node '" + node.name + "'");
        }
      }
    }

    std::map<std::string, SourcePos> defined;
    for (auto& eq : node.equations) {
      for (const auto& v : eq.lhs) {
        const VarDecl* d = node.find_var(v);
        if (!d) throw FrontendError(ErrorKind::UnknownVariable, eq.pos, "'" + v + "' is not declared");
        if (node.is_input(v)) throw FrontendError(ErrorKind::Type, eq.pos, "input '" + v + "' cannot be defined");
        if (!defined.emplace(v, eq.pos).second) {
          throw FrontendError(ErrorKind::DuplicateDefinition, eq.pos, "'" + v + "' has more than one equation");
        }
      }
      if (eq.lhs.size() == 1) {
        Sort s = annotate(eq.rhs, node);
        Sort want = node.find_var(eq.lhs.front())->sort;
        if (s != want) {
          throw FrontendError(ErrorKind::Type, eq.pos,
                              "'" + eq.lhs.front() + "' has type " + sort_name(want) + " but its equation has type " +
                                  sort_name(s));
        }
      } else {
        check_tuple_call(eq, node);
      }
    }

    for (const auto* group : {&node.outputs, &node.locals}) {
      for (const auto& d : *group) {
        if (!defined.count(d.name)) {
          throw FrontendError(ErrorKind::MissingDefinition, d.pos,
                              "'" + d.name + "' in node '" + node.name + "' has no equation");
        }
      }
    }
  }

  void check_tuple_call(Equation& eq, const Node& node)
  {
    if (eq.rhs.kind != ExprKind::Call) {
      throw FrontendError(ErrorKind::Type, eq.pos, "a tuple of variables can only be defined by a node call");
    }
    const Node& callee = check_call_args(eq.rhs, node);
    if (callee.outputs.size() != eq.lhs.size()) {
      throw FrontendError(ErrorKind::Type, eq.pos,
                          "node '" + callee.name + "' returns " + std::to_string(callee.outputs.size()) +
                              " values, " + std::to_string(eq.lhs.size()) + " expected");
    }
    for (std::size_t i = 0; i < eq.lhs.size(); ++i) {
      Sort want = node.find_var(eq.lhs[i])->sort;
      if (callee.outputs[i].sort != want) {
        throw FrontendError(ErrorKind::Type, eq.pos,
                            "'" + eq.lhs[i] + "' has type " + sort_name(want) + " but output '" +
                                callee.outputs[i].name + "' of '" + callee.name + "' has type " +
                                sort_name(callee.outputs[i].sort));
      }
    }
    eq.rhs.sort = callee.outputs.front().sort;
  }

  const Node& check_call_args(Expr& e, const Node& node)
  {
    const Node* callee = program_.find_node(e.name);
    if (!callee) throw FrontendError(ErrorKind::UnknownNode, e.pos, "call to unknown node '" + e.name + "'");
    if (callee->inputs.size() != e.args.size()) {
      type_error(e, "node '" + e.name + "' expects " + std::to_string(callee->inputs.size()) + " arguments, got " +
                        std::to_string(e.args.size()));
    }
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      Sort s = annotate(e.args[i], node);
      if (s != callee->inputs[i].sort) {
        type_error(e, "argument " + std::to_string(i + 1) + " of '" + e.name + "' should be " +
                          sort_name(callee->inputs[i].sort) + ", got " + sort_name(s));
      }
    }
    return *callee;
  }

  Sort annotate(Expr& e, const Node& node)
  {
    Sort s = infer(e, node);
    e.sort = s;
    return s;
  }

  Sort infer(Expr& e, const Node& node)
  {
    switch (e.kind) {
      case ExprKind::BoolLit: return Sort::Bool;
      case ExprKind::IntLit: return Sort::Int;
      case ExprKind::RealLit: return Sort::Real;
      case ExprKind::Var: {
        const VarDecl* d = node.find_var(e.name);
        if (!d) {
          throw FrontendError(ErrorKind::UnknownVariable, e.pos,
                              "'" + e.name + "' is not declared in node '" + node.name + "'");
        }
        return d->sort;
      }
      case ExprKind::Unary: {
        Sort s = annotate(e.args[0], node);
        if (e.unary == UnaryOp::Neg && s == Sort::Bool) type_error(e, "unary minus applied to bool");
        if (e.unary == UnaryOp::Not && s != Sort::Bool) type_error(e, "'not' applied to " + std::string(sort_name(s)));
        return s;
      }
      case ExprKind::Binary: return infer_binary(e, node);
      case ExprKind::Arrow: {
        Sort a = annotate(e.args[0], node);
        Sort b = annotate(e.args[1], node);
        if (a != b) type_error(e, std::string("'->' operands differ: ") + sort_name(a) + " and " + sort_name(b));
        return a;
      }
      case ExprKind::Pre: return annotate(e.args[0], node);
      case ExprKind::Ite: {
        if (annotate(e.args[0], node) != Sort::Bool) type_error(e, "if condition is not bool");
        Sort a = annotate(e.args[1], node);
        Sort b = annotate(e.args[2], node);
        if (a != b) type_error(e, std::string("if branches differ: ") + sort_name(a) + " and " + sort_name(b));
        return a;
      }
      case ExprKind::Call: {
        const Node& callee = check_call_args(e, node);
        if (callee.outputs.size() != 1) {
          type_error(e, "node '" + callee.name + "' has " + std::to_string(callee.outputs.size()) +
                            " outputs and cannot be used as an expression");
        }
        return callee.outputs.front().sort;
      }
    }
    type_error(e, "unsupported expression");
  }

  Sort infer_binary(Expr& e, const Node& node)
  {
    Sort a = annotate(e.args[0], node);
    Sort b = annotate(e.args[1], node);
    const std::string op(to_string(e.binary));
    auto same_numeric = [&]() {
      if (a == Sort::Bool || b == Sort::Bool || a != b) {
        type_error(e, "operator '" + op + "' expects two int or two real operands, got " + sort_name(a) + " and " +
                          sort_name(b));
      }
      return a;
    };
    switch (e.binary) {
      case BinaryOp::Add:
      case BinaryOp::Sub:
        return same_numeric();
      case BinaryOp::Mul: {
        Sort s = same_numeric();
        if (!constant_value(e.args[0]) && !constant_value(e.args[1])) {
          type_error(e, "nonlinear product: one factor must be a constant");
        }
        return s;
      }
      case BinaryOp::Div: {
        if (a != Sort::Real || b != Sort::Real) type_error(e, "'/' is only defined on reals; use 'div' for ints");
        auto d = constant_value(e.args[1]);
        if (!d || *d == 0) type_error(e, "'/' needs a nonzero constant divisor");
        return Sort::Real;
      }
      case BinaryOp::IntDiv:
      case BinaryOp::Mod: {
        if (a != Sort::Int || b != Sort::Int) type_error(e, "'" + op + "' is only defined on ints");
        auto d = constant_value(e.args[1]);
        if (!d || *d <= 0) type_error(e, "'" + op + "' needs a positive integer constant right operand");
        return Sort::Int;
      }
      case BinaryOp::Eq:
      case BinaryOp::Neq:
        if (a != b) type_error(e, "comparison between " + std::string(sort_name(a)) + " and " + sort_name(b));
        return Sort::Bool;
      case BinaryOp::Lt:
      case BinaryOp::Le:
      case BinaryOp::Gt:
      case BinaryOp::Ge:
        same_numeric();
        return Sort::Bool;
      case BinaryOp::And:
      case BinaryOp::Or:
      case BinaryOp::Xor:
      case BinaryOp::Implies:
        if (a != Sort::Bool || b != Sort::Bool) {
          type_error(e, "operator '" + op + "' expects bool operands, got " + sort_name(a) + " and " + sort_name(b));
        }
        return Sort::Bool;
    }
    type_error(e, "unsupported operator");
  }

  Program& program_;
};

std::string resolve_main(const Program& p, const std::optional<std::string>& override_name)
{
  if (p.nodes.empty()) throw FrontendError(ErrorKind::UnknownNode, {}, "program has no nodes");
  if (override_name) {
    if (!p.find_node(*override_name)) {
      throw FrontendError(ErrorKind::UnknownNode, {}, "main node '" + *override_name + "' does not exist");
    }
    return *override_name;
  }
  if (p.main) {
    if (!p.find_node(p.main->name)) {
      throw FrontendError(ErrorKind::UnknownNode, p.main->pos, "main node '" + p.main->name + "' does not exist");
    }
    return p.main->name;
  }
  if (p.find_node("main")) return "main";
  return p.nodes.back().name;
}

std::vector<std::string> resolve_properties(const Program& p, const Node& main)
{
  std::vector<std::string> props;
  if (!p.properties.empty()) {
    for (const auto& pr : p.properties) {
      const VarDecl* d = main.find_var(pr.name);
      if (!d || main.is_input(pr.name)) {
        throw FrontendError(ErrorKind::UnknownVariable, pr.pos,
                            "property '" + pr.name + "' is not an output or local of node '" + main.name + "'");
      }
      if (d->sort != Sort::Bool) {
        throw FrontendError(ErrorKind::Type, pr.pos, "property '" + pr.name + "' is not boolean");
      }
      if (std::find(props.begin(), props.end(), pr.name) == props.end()) props.push_back(pr.name);
    }
  } else {
    for (const auto& d : main.outputs) {
      if (d.sort == Sort::Bool) props.push_back(d.name);
    }
  }
  if (props.empty()) {
    throw FrontendError(ErrorKind::NoProperty, main.pos,
                        "node '" + main.name + "' has no boolean output and no --%PROPERTY pragma");
  }
  return props;
}

}  // namespace

TypedProgram typecheck(const Program& program, const std::optional<std::string>& main_override)
{
  TypedProgram out;
  out.program = program;
  Checker(out.program).check_all();
  out.main = resolve_main(out.program, main_override);
  out.properties = resolve_properties(out.program, out.main_node());
  return out;
}

}  // namespace pk::frontend
