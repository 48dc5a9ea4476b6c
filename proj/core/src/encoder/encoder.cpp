#include "pk/encoder/encoder.hpp"

#include <sstream>

#include "pk/logic/printer.hpp"

namespace pk::encoder {

using frontend::BinaryOp;
using frontend::Expr;
using frontend::ExprKind;
using frontend::UnaryOp;

bool StateVar::visible() const
{
  return (role == VarRole::Input || role == VarRole::Output || role == VarRole::Local) &&
         name.find('.') == std::string::npos;
}

TransitionSystem TransitionSystem::make(std::vector<StateVar> vars, Term init, Term trans, std::vector<Term> properties,
                                        std::vector<std::string> property_names)
{
  TransitionSystem ts;
  ts.vars = std::move(vars);
  ts.init = std::move(init);
  ts.trans = std::move(trans);
  ts.properties = std::move(properties);
  ts.property_names = std::move(property_names);
  while (ts.property_names.size() < ts.properties.size()) {
    ts.property_names.push_back("P" + std::to_string(ts.property_names.size()));
  }
  for (const auto& c : logic::conjuncts(ts.init)) {
    if (c.is_app() && c.op() == logic::Op::Eq && c.arg(0).is_var() && c.arg(0).timing() == logic::Timing::Current) {
      ts.definitions[c.arg(0).name()].init_rhs = c.arg(1);
    }
  }
  for (const auto& c : logic::conjuncts(ts.trans)) {
    if (c.is_app() && c.op() == logic::Op::Eq && c.arg(0).is_var() && c.arg(0).timing() == logic::Timing::Next) {
      ts.definitions[c.arg(0).name()].next_rhs = c.arg(1);
    }
  }
  return ts;
}

const StateVar* TransitionSystem::find(const std::string& name) const
{
  for (const auto& v : vars) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

std::map<std::string, Sort> TransitionSystem::state_vars() const
{
  std::map<std::string, Sort> out;
  for (const auto& v : vars) out.emplace(v.name, v.sort);
  return out;
}

Term TransitionSystem::property() const { return logic::land(properties); }

TransitionSystem TransitionSystem::with_property(Term p, std::string name) const
{
  TransitionSystem ts = *this;
  ts.properties = {std::move(p)};
  ts.property_names = {std::move(name)};
  return ts;
}

namespace {

class Encoder {
 public:
  explicit Encoder(const frontend::Node& node) : node_(node) {}

  TransitionSystem run(const std::vector<std::string>& property_names)
  {
    for (const auto& d : node_.inputs) vars_.push_back({d.name, d.sort, VarRole::Input});
    for (const auto& d : node_.outputs) vars_.push_back({d.name, d.sort, VarRole::Output});
    for (const auto& d : node_.locals) vars_.push_back({d.name, d.sort, VarRole::Local});

    std::vector<std::pair<std::string, Expr>> equations;
    for (const auto& eq : node_.equations) {
      if (eq.lhs.size() != 1) throw InternalError("tuple equation survived inlining");
      equations.emplace_back(eq.lhs.front(), normalize(eq.rhs));
    }
    for (auto& a : aux_equations_) equations.push_back(std::move(a));

    std::vector<Term> init, trans;
    for (const auto& [name, rhs] : equations) {
      Sort s = sort_of(name);
      init.push_back(logic::eq(logic::var(name, s), at_init(rhs)));
      trans.push_back(logic::eq(logic::next_var(name, s), at_next(rhs)));
    }
    for (const auto& v : vars_) {
      if (v.role == VarRole::Fresh) trans.push_back(logic::eq(logic::next_var(v.name, v.sort), logic::var(v.name, v.sort)));
    }

    std::vector<Term> props;
    for (const auto& p : property_names) props.push_back(logic::var(p, sort_of(p)));
    return TransitionSystem::make(vars_, logic::land(std::move(init)), logic::land(std::move(trans)), std::move(props),
                                  property_names);
  }

 private:
  Sort sort_of(const std::string& name) const
  {
    for (const auto& v : vars_) {
      if (v.name == name) return v.sort;
    }
    throw InternalError("undeclared stream '" + name + "'");
  }

  static Sort expr_sort(const Expr& e)
  {
    if (!e.sort) throw InternalError("expression without a sort");
    return *e.sort;
  }

  // Rewrites `pre e` with e not a variable into `pre aux` plus `aux = e`.
  Expr normalize(const Expr& e)
  {
    if (e.kind == ExprKind::Call) throw InternalError("node call '" + e.name + "' survived inlining");
    Expr out = e;
    for (auto& a : out.args) a = normalize(a);
    if (out.kind == ExprKind::Pre && out.args[0].kind != ExprKind::Var) {
      std::string name = "aux." + std::to_string(++aux_count_);
      Sort s = expr_sort(out.args[0]);
      vars_.push_back({name, s, VarRole::Aux});
      aux_equations_.emplace_back(name, std::move(out.args[0]));
      Expr v = Expr::variable(name, e.pos);
      v.sort = s;
      out.args[0] = std::move(v);
    }
    return out;
  }

  Term at_init(const Expr& e)
  {
    switch (e.kind) {
      case ExprKind::Arrow: return at_init(e.args[0]);
      case ExprKind::Pre: {
        std::string name = "init." + std::to_string(++fresh_count_);
        Sort s = expr_sort(e);
        vars_.push_back({name, s, VarRole::Fresh});
        return logic::var(name, s);
      }
      case ExprKind::Var: return logic::var(e.name, sort_of(e.name));
      default: return structural(e, [this](const Expr& x) { return at_init(x); });
    }
  }

  Term at_next(const Expr& e)
  {
    switch (e.kind) {
      case ExprKind::Arrow: return at_next(e.args[1]);
      case ExprKind::Pre: return logic::var(e.args[0].name, sort_of(e.args[0].name));
      case ExprKind::Var: return logic::next_var(e.name, sort_of(e.name));
      default: return structural(e, [this](const Expr& x) { return at_next(x); });
    }
  }

  template <class F>
  Term structural(const Expr& e, F&& sub)
  {
    switch (e.kind) {
      case ExprKind::BoolLit: return logic::bool_const(e.boolean);
      case ExprKind::IntLit: return logic::int_const(numerator(e.number));
      case ExprKind::RealLit: return logic::real_const(e.number);
      case ExprKind::Unary:
        return e.unary == UnaryOp::Neg ? logic::neg(sub(e.args[0])) : logic::lnot(sub(e.args[0]));
      case ExprKind::Ite: return logic::ite(sub(e.args[0]), sub(e.args[1]), sub(e.args[2]));
      case ExprKind::Binary: break;
      default: throw InternalError("unexpected expression in encoder");
    }
    Term a = sub(e.args[0]);
    Term b = sub(e.args[1]);
    switch (e.binary) {
      case BinaryOp::Add: return logic::add(a, b);
      case BinaryOp::Sub: return logic::sub(a, b);
      case BinaryOp::Mul: return logic::mul(a, b);
      case BinaryOp::Div:
        if (!b.is_const()) throw InternalError("'/' with a non-constant divisor");
        return logic::mul(a, logic::real_const(1 / b.value().as_rational()));
      case BinaryOp::IntDiv:
      case BinaryOp::Mod: {
        if (!b.is_const()) throw InternalError("'div'/'mod' with a non-constant divisor");
        logic::Integer d = b.value().as_integer();
        return e.binary == BinaryOp::IntDiv ? logic::int_div(a, d) : logic::mod(a, d);
      }
      case BinaryOp::Eq: return logic::eq(a, b);
      case BinaryOp::Neq: return logic::lnot(logic::eq(a, b));
      case BinaryOp::Lt: return logic::lt(a, b);
      case BinaryOp::Le: return logic::le(a, b);
      case BinaryOp::Gt: return logic::gt(a, b);
      case BinaryOp::Ge: return logic::ge(a, b);
      case BinaryOp::And: return logic::land(a, b);
      case BinaryOp::Or: return logic::lor(a, b);
      case BinaryOp::Xor: return logic::lnot(logic::iff(a, b));
      case BinaryOp::Implies: return logic::implies(a, b);
    }
    throw InternalError("unexpected operator in encoder");
  }

  const frontend::Node& node_;
  std::vector<StateVar> vars_;
  std::vector<std::pair<std::string, Expr>> aux_equations_;
  unsigned aux_count_ = 0;
  unsigned fresh_count_ = 0;
};

}  // namespace

TransitionSystem encode(const frontend::TypedProgram& program)
{
  if (program.program.nodes.size() != 1) throw InternalError("encoder expects a single inlined node");
  return Encoder(program.main_node()).run(program.properties);
}

std::string dump_smtlib(const TransitionSystem& ts)
{
  std::ostringstream os;
  os << "; state variables\n";
  for (const auto& v : ts.vars) {
    os << "(declare-const " << logic::to_smtlib(logic::var(v.name, v.sort)) << ' ' << logic::to_smtlib(v.sort) << ")\n";
  }
  os << "; next-state copies\n";
  for (const auto& v : ts.vars) {
    os << "(declare-const " << logic::to_smtlib(logic::next_var(v.name, v.sort)) << ' ' << logic::to_smtlib(v.sort)
       << ")\n";
  }
  os << "(define-fun init () Bool " << logic::to_smtlib(ts.init) << ")\n";
  os << "(define-fun trans () Bool " << logic::to_smtlib(ts.trans) << ")\n";
  for (std::size_t i = 0; i < ts.properties.size(); ++i) {
    os << "(define-fun |property " << ts.property_names[i] << "| () Bool " << logic::to_smtlib(ts.properties[i])
       << ")\n";
  }
  return os.str();
}

std::optional<std::string> check_well_formed(const TransitionSystem& ts)
{
  auto declared = ts.state_vars();
  auto check = [&](const Term& f, const char* what, bool allow_next) -> std::optional<std::string> {
    if (f.sort() != Sort::Bool) return std::string(what) + " is not boolean";
    if (logic::mentions_indexed(f)) return std::string(what) + " mentions step-indexed variables";
    if (!allow_next && logic::mentions_next(f)) return std::string(what) + " mentions primed variables";
    for (const auto& [name, sort] : logic::free_state_vars(f)) {
      auto it = declared.find(name);
      if (it == declared.end()) return std::string(what) + " mentions undeclared '" + name + "'";
      if (it->second != sort) return std::string(what) + " uses '" + name + "' at the wrong sort";
    }
    return std::nullopt;
  };
  if (auto e = check(ts.init, "I", false)) return e;
  if (auto e = check(ts.trans, "T", true)) return e;
  for (const auto& p : ts.properties) {
    if (auto e = check(p, "property", false)) return e;
  }
  return std::nullopt;
}

}  // namespace pk::encoder
