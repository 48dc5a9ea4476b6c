#include "pk/logic/term.hpp"

#include <unordered_map>

#include "pk/logic/printer.hpp"

namespace pk::logic {

// ---------------------------------------------------------------------------
// Sort / Value

std::string_view to_string(Sort s)
{
  switch (s) {
    case Sort::Bool: return "bool";
    case Sort::Int: return "int";
    case Sort::Real: return "real";
  }
  return "?";
}

Value Value::boolean(bool b)
{
  Value v;
  v.sort_ = Sort::Bool;
  v.flag_ = b;
  return v;
}

Value Value::integer(Integer n)
{
  Value v;
  v.sort_ = Sort::Int;
  v.number_ = Rational(std::move(n));
  return v;
}

Value Value::real(Rational q)
{
  Value v;
  v.sort_ = Sort::Real;
  v.number_ = std::move(q);
  return v;
}

Value Value::default_of(Sort s)
{
  switch (s) {
    case Sort::Bool: return boolean(false);
    case Sort::Int: return integer(0);
    case Sort::Real: return real(0);
  }
  return boolean(false);
}

std::string Value::to_string() const
{
  if (sort_ == Sort::Bool) return flag_ ? "true" : "false";
  return logic::to_string(number_);
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.to_string(); }

std::string_view to_string(Op op)
{
  switch (op) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Neg: return "neg";
    case Op::Mul: return "*";
    case Op::IntDiv: return "div";
    case Op::Mod: return "mod";
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::Eq: return "=";
    case Op::Ge: return ">=";
    case Op::Gt: return ">";
    case Op::Not: return "not";
    case Op::And: return "and";
    case Op::Or: return "or";
    case Op::Implies: return "=>";
    case Op::Iff: return "<=>";
    case Op::Ite: return "ite";
    case Op::Apply: return "apply";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Nodes

namespace detail {

struct TermNode {
  Term::Kind kind = Term::Kind::Const;
  Sort sort = Sort::Bool;
  std::size_t hash = 0;
  std::size_t depth = 0;

  std::string name;  // variable name or function symbol
  Timing timing = Timing::Current;
  Step step = 0;

  Value value;

  Op op = Op::Add;
  std::vector<Term> args;
};

}  // namespace detail

namespace {

inline void hash_combine(std::size_t& seed, std::size_t v)
{
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t compute_hash(const detail::TermNode& n)
{
  std::size_t h = static_cast<std::size_t>(n.kind) * 31 + static_cast<std::size_t>(n.sort);
  switch (n.kind) {
    case Term::Kind::Var:
      hash_combine(h, std::hash<std::string>{}(n.name));
      hash_combine(h, static_cast<std::size_t>(n.timing));
      hash_combine(h, n.step);
      break;
    case Term::Kind::Const:
      hash_combine(h, std::hash<std::string>{}(n.value.to_string()));
      break;
    case Term::Kind::App:
      hash_combine(h, static_cast<std::size_t>(n.op));
      hash_combine(h, std::hash<std::string>{}(n.name));
      for (const auto& a : n.args) hash_combine(h, a.hash());
      break;
  }
  return h;
}

[[noreturn]] void fail(const std::string& msg) { throw LogicError(msg); }

}  // namespace

Term make_node(detail::TermNode&& node)
{
  node.hash = compute_hash(node);
  if (node.kind == Term::Kind::App) {
    std::size_t d = 0;
    for (const auto& a : node.args) d = std::max(d, a.depth());
    node.depth = d + 1;
  }
  return Term(std::make_shared<const detail::TermNode>(std::move(node)));
}

namespace {

const Term& true_term()
{
  static const Term t = [] {
    detail::TermNode n;
    n.kind = Term::Kind::Const;
    n.sort = Sort::Bool;
    n.value = Value::boolean(true);
    return make_node(std::move(n));
  }();
  return t;
}

}  // namespace

Term::Term() : node_(true_term().node_) {}

Term::Kind Term::kind() const { return node_->kind; }
Sort Term::sort() const { return node_->sort; }
std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::depth() const { return node_->depth; }

bool Term::is_true() const { return is_const() && sort() == Sort::Bool && value().as_bool(); }
bool Term::is_false() const { return is_const() && sort() == Sort::Bool && !value().as_bool(); }

const std::string& Term::name() const
{
  if (node_->kind != Kind::Var) fail("name() on non-variable term");
  return node_->name;
}

Timing Term::timing() const
{
  if (node_->kind != Kind::Var) fail("timing() on non-variable term");
  return node_->timing;
}

Step Term::step() const
{
  if (node_->kind != Kind::Var) fail("step() on non-variable term");
  return node_->step;
}

const Value& Term::value() const
{
  if (node_->kind != Kind::Const) fail("value() on non-constant term");
  return node_->value;
}

Op Term::op() const
{
  if (node_->kind != Kind::App) fail("op() on non-application term");
  return node_->op;
}

std::span<const Term> Term::args() const
{
  if (node_->kind != Kind::App) return {};
  return node_->args;
}

const std::string& Term::function() const
{
  if (node_->kind != Kind::App || node_->op != Op::Apply) fail("function() on non-apply term");
  return node_->name;
}

bool operator==(const Term& a, const Term& b)
{
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

int compare(const Term& a, const Term& b)
{
  if (a.node_id() == b.node_id()) return 0;
  auto cmp = [](auto x, auto y) { return x < y ? -1 : (y < x ? 1 : 0); };
  if (int c = cmp(a.kind(), b.kind())) return c;
  if (int c = cmp(a.sort(), b.sort())) return c;
  switch (a.kind()) {
    case Term::Kind::Var:
      if (int c = a.name().compare(b.name())) return c < 0 ? -1 : 1;
      if (int c = cmp(a.timing(), b.timing())) return c;
      return cmp(a.step(), b.step());
    case Term::Kind::Const:
      return cmp(a.value(), b.value());
    case Term::Kind::App: {
      if (int c = cmp(a.op(), b.op())) return c;
      if (a.op() == Op::Apply) {
        if (int c = a.function().compare(b.function())) return c < 0 ? -1 : 1;
      }
      auto aa = a.args();
      auto bb = b.args();
      if (int c = cmp(aa.size(), bb.size())) return c;
      for (std::size_t i = 0; i < aa.size(); ++i) {
        if (int c = compare(aa[i], bb[i])) return c;
      }
      return 0;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Construction

Term constant(const Value& v)
{
  if (v.sort() == Sort::Int && !is_integral(v.as_rational())) fail("non-integral Int constant");
  detail::TermNode n;
  n.kind = Term::Kind::Const;
  n.sort = v.sort();
  n.value = v;
  return make_node(std::move(n));
}

Term bool_const(bool b) { return b ? true_term() : constant(Value::boolean(false)); }
Term int_const(Integer n) { return constant(Value::integer(std::move(n))); }
Term real_const(Rational q) { return constant(Value::real(std::move(q))); }

namespace {

Term make_var(std::string name, Sort sort, Timing timing, Step step)
{
  if (name.empty()) fail("empty variable name");
  detail::TermNode n;
  n.kind = Term::Kind::Var;
  n.sort = sort;
  n.name = std::move(name);
  n.timing = timing;
  n.step = step;
  return make_node(std::move(n));
}

Sort result_sort(Op op, const std::vector<Term>& args, Sort declared)
{
  auto need_arity = [&](std::size_t k) {
    if (args.size() != k) {
      fail(std::string("operator ") + std::string(to_string(op)) + " expects " +
           std::to_string(k) + " arguments");
    }
  };
  auto need_same_numeric = [&]() {
    Sort s = args[0].sort();
    if (!is_numeric(s)) fail(std::string("operator ") + std::string(to_string(op)) + " on bool");
    for (const auto& a : args) {
      if (a.sort() != s) fail(std::string("mixed sorts under ") + std::string(to_string(op)));
    }
    return s;
  };
  auto need_bool = [&]() {
    for (const auto& a : args) {
      if (a.sort() != Sort::Bool) fail(std::string("non-bool argument to ") + std::string(to_string(op)));
    }
  };

  switch (op) {
    case Op::Add:
    case Op::Sub:
      need_arity(2);
      return need_same_numeric();
    case Op::Neg:
      need_arity(1);
      return need_same_numeric();
    case Op::Mul: {
      need_arity(2);
      Sort s = need_same_numeric();
      if (!args[0].is_const() && !args[1].is_const()) fail("nonlinear product: neither factor is constant");
      return s;
    }
    case Op::IntDiv:
    case Op::Mod:
      need_arity(2);
      if (args[0].sort() != Sort::Int || args[1].sort() != Sort::Int) fail("div/mod on non-int");
      if (!args[1].is_const() || args[1].value().as_rational() == 0) {
        fail("div/mod divisor must be a nonzero integer constant");
      }
      return Sort::Int;
    case Op::Lt:
    case Op::Le:
    case Op::Ge:
    case Op::Gt:
      need_arity(2);
      need_same_numeric();
      return Sort::Bool;
    case Op::Eq:
      need_arity(2);
      if (args[0].sort() != args[1].sort()) fail("equality between different sorts");
      return Sort::Bool;
    case Op::Not:
      need_arity(1);
      need_bool();
      return Sort::Bool;
    case Op::And:
    case Op::Or:
      need_bool();
      return Sort::Bool;
    case Op::Implies:
    case Op::Iff:
      need_arity(2);
      need_bool();
      return Sort::Bool;
    case Op::Ite:
      need_arity(3);
      if (args[0].sort() != Sort::Bool) fail("ite condition is not bool");
      if (args[1].sort() != args[2].sort()) fail("ite branches differ in sort");
      return args[1].sort();
    case Op::Apply:
      return declared;
  }
  fail("unknown operator");
}

}  // namespace

Term var(std::string name, Sort sort) { return make_var(std::move(name), sort, Timing::Current, 0); }
Term next_var(std::string name, Sort sort) { return make_var(std::move(name), sort, Timing::Next, 0); }
Term indexed_var(std::string name, Sort sort, Step step)
{
  return make_var(std::move(name), sort, Timing::Indexed, step);
}

Term make_app(Op op, std::vector<Term> args, std::string function)
{
  if (op == Op::Apply && function.empty()) fail("apply without a function symbol");
  detail::TermNode n;
  n.kind = Term::Kind::App;
  n.op = op;
  n.sort = result_sort(op, args, Sort::Bool);
  n.name = std::move(function);
  n.args = std::move(args);
  return make_node(std::move(n));
}

namespace {

Term numeric_const(Sort s, Rational q)
{
  return s == Sort::Int ? int_const(numerator(q)) : real_const(std::move(q));
}

bool both_const(const Term& a, const Term& b) { return a.is_const() && b.is_const(); }

}  // namespace

Term add(Term a, Term b)
{
  if (both_const(a, b) && a.sort() == b.sort() && is_numeric(a.sort())) {
    return numeric_const(a.sort(), a.value().as_rational() + b.value().as_rational());
  }
  return make_app(Op::Add, {std::move(a), std::move(b)});
}

Term sub(Term a, Term b)
{
  if (both_const(a, b) && a.sort() == b.sort() && is_numeric(a.sort())) {
    return numeric_const(a.sort(), a.value().as_rational() - b.value().as_rational());
  }
  return make_app(Op::Sub, {std::move(a), std::move(b)});
}

Term neg(Term a)
{
  if (a.is_const() && is_numeric(a.sort())) {
    return numeric_const(a.sort(), -a.value().as_rational());
  }
  return make_app(Op::Neg, {std::move(a)});
}

Term mul(Term a, Term b)
{
  if (both_const(a, b) && a.sort() == b.sort() && is_numeric(a.sort())) {
    return numeric_const(a.sort(), a.value().as_rational() * b.value().as_rational());
  }
  return make_app(Op::Mul, {std::move(a), std::move(b)});
}

Term int_div(Term a, const Integer& divisor)
{
  if (divisor == 0) fail("division by zero");
  if (a.is_const() && a.sort() == Sort::Int) return int_const(floor_div(a.value().as_integer(), divisor));
  return make_app(Op::IntDiv, {std::move(a), int_const(divisor)});
}

Term mod(Term a, const Integer& divisor)
{
  if (divisor == 0) fail("modulus by zero");
  if (a.is_const() && a.sort() == Sort::Int) return int_const(floor_mod(a.value().as_integer(), divisor));
  return make_app(Op::Mod, {std::move(a), int_const(divisor)});
}

Term lt(Term a, Term b) { return make_app(Op::Lt, {std::move(a), std::move(b)}); }
Term le(Term a, Term b) { return make_app(Op::Le, {std::move(a), std::move(b)}); }
Term eq(Term a, Term b) { return make_app(Op::Eq, {std::move(a), std::move(b)}); }
Term ge(Term a, Term b) { return make_app(Op::Ge, {std::move(a), std::move(b)}); }
Term gt(Term a, Term b) { return make_app(Op::Gt, {std::move(a), std::move(b)}); }

Term lnot(Term a) { return make_app(Op::Not, {std::move(a)}); }

Term land(std::vector<Term> args)
{
  if (args.empty()) return bool_const(true);
  if (args.size() == 1) return std::move(args.front());
  return make_app(Op::And, std::move(args));
}

Term land(Term a, Term b) { return land(std::vector<Term>{std::move(a), std::move(b)}); }

Term lor(std::vector<Term> args)
{
  if (args.empty()) return bool_const(false);
  if (args.size() == 1) return std::move(args.front());
  return make_app(Op::Or, std::move(args));
}

Term lor(Term a, Term b) { return lor(std::vector<Term>{std::move(a), std::move(b)}); }

Term implies(Term a, Term b) { return make_app(Op::Implies, {std::move(a), std::move(b)}); }
Term iff(Term a, Term b) { return make_app(Op::Iff, {std::move(a), std::move(b)}); }
Term ite(Term c, Term t, Term e) { return make_app(Op::Ite, {std::move(c), std::move(t), std::move(e)}); }

Term apply(std::string function, Sort result, std::vector<Term> args)
{
  if (function.empty()) fail("apply without a function symbol");
  detail::TermNode n;
  n.kind = Term::Kind::App;
  n.op = Op::Apply;
  n.sort = result;
  n.name = std::move(function);
  n.args = std::move(args);
  return make_node(std::move(n));
}

// ---------------------------------------------------------------------------
// Traversals

namespace {

/// Rebuilds a term bottom-up, mapping variables through `on_var`. Shared
/// subterms are rebuilt once.
template <class OnVar>
Term rebuild(const Term& t, OnVar&& on_var, std::unordered_map<const void*, Term>& memo)
{
  if (auto it = memo.find(t.node_id()); it != memo.end()) return it->second;
  Term out;
  switch (t.kind()) {
    case Term::Kind::Const:
      out = t;
      break;
    case Term::Kind::Var:
      out = on_var(t);
      break;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      bool same = true;
      for (const auto& a : t.args()) {
        args.push_back(rebuild(a, on_var, memo));
        same = same && args.back().node_id() == a.node_id();
      }
      if (same) {
        out = t;
      } else if (t.op() == Op::Apply) {
        out = apply(t.function(), t.sort(), std::move(args));
      } else {
        out = make_app(t.op(), std::move(args));
      }
      break;
    }
  }
  memo.emplace(t.node_id(), out);
  return out;
}

}  // namespace

Term instantiate(const Term& f, Step i)
{
  std::unordered_map<const void*, Term> memo;
  return rebuild(
      f,
      [i](const Term& v) {
        switch (v.timing()) {
          case Timing::Current: return indexed_var(v.name(), v.sort(), i);
          case Timing::Next: return indexed_var(v.name(), v.sort(), i + 1);
          case Timing::Indexed: return v;
        }
        return v;
      },
      memo);
}

Term instantiate_state(const Term& f, Step i) { return instantiate(f, i); }
Term instantiate_trans(const Term& f, Step i) { return instantiate(f, i); }

Term strip_primes(const Term& f)
{
  std::unordered_map<const void*, Term> memo;
  return rebuild(
      f,
      [](const Term& v) { return v.timing() == Timing::Next ? var(v.name(), v.sort()) : v; },
      memo);
}

void visit_subterms(const Term& f, const std::function<bool(const Term&)>& visit)
{
  if (!visit(f)) return;
  for (const auto& a : f.args()) visit_subterms(a, visit);
}

std::set<IndexedVar> free_indexed_vars(const Term& f)
{
  std::set<IndexedVar> out;
  std::unordered_map<const void*, bool> seen;
  visit_subterms(f, [&](const Term& t) {
    if (!seen.emplace(t.node_id(), true).second) return false;
    if (t.is_var() && t.timing() == Timing::Indexed) out.insert({t.name(), t.step()});
    return true;
  });
  return out;
}

std::map<std::string, Sort> free_state_vars(const Term& f)
{
  std::map<std::string, Sort> out;
  visit_subterms(f, [&](const Term& t) {
    if (t.is_var() && t.timing() != Timing::Indexed) out.emplace(t.name(), t.sort());
    return true;
  });
  return out;
}

bool mentions_next(const Term& f)
{
  bool found = false;
  visit_subterms(f, [&](const Term& t) {
    if (found) return false;
    if (t.is_var() && t.timing() == Timing::Next) found = true;
    return !found;
  });
  return found;
}

bool mentions_indexed(const Term& f)
{
  bool found = false;
  visit_subterms(f, [&](const Term& t) {
    if (found) return false;
    if (t.is_var() && t.timing() == Timing::Indexed) found = true;
    return !found;
  });
  return found;
}

std::vector<Term> conjuncts(const Term& f)
{
  if (f.is_app() && f.op() == Op::And) return {f.args().begin(), f.args().end()};
  if (f.is_true()) return {};
  return {f};
}

std::map<Op, std::size_t> operator_counts(const Term& f)
{
  std::map<Op, std::size_t> out;
  visit_subterms(f, [&](const Term& t) {
    if (t.is_app()) ++out[t.op()];
    return true;
  });
  return out;
}

std::ostream& operator<<(std::ostream& os, const IndexedVar& v) { return os << v.name << '@' << v.step; }

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }

}  // namespace pk::logic
