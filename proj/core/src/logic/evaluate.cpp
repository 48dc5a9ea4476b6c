#include "pk/logic/evaluate.hpp"

namespace pk::logic {

namespace {

std::optional<Value> eval(const Term& t, const Assignment& a);

std::optional<bool> eval_bool(const Term& t, const Assignment& a)
{
  auto v = eval(t, a);
  if (!v) return std::nullopt;
  return v->as_bool();
}

std::optional<Rational> eval_num(const Term& t, const Assignment& a)
{
  auto v = eval(t, a);
  if (!v) return std::nullopt;
  return v->as_rational();
}

Value numeric(Sort s, Rational q)
{
  return s == Sort::Int ? Value::integer(numerator(q)) : Value::real(std::move(q));
}

std::optional<Value> eval_app(const Term& t, const Assignment& a)
{
  const auto args = t.args();
  switch (t.op()) {
    case Op::Add:
    case Op::Sub:
    case Op::Mul: {
      auto x = eval_num(args[0], a);
      if (!x) return std::nullopt;
      auto y = eval_num(args[1], a);
      if (!y) return std::nullopt;
      Rational r;
      if (t.op() == Op::Add) {
        r = *x + *y;
      } else if (t.op() == Op::Sub) {
        r = *x - *y;
      } else {
        r = *x * *y;
      }
      return numeric(t.sort(), std::move(r));
    }
    case Op::Neg: {
      auto x = eval_num(args[0], a);
      if (!x) return std::nullopt;
      return numeric(t.sort(), -*x);
    }
    case Op::IntDiv:
    case Op::Mod: {
      auto x = eval(args[0], a);
      if (!x) return std::nullopt;
      Integer d = args[1].value().as_integer();
      Integer n = x->as_integer();
      return Value::integer(t.op() == Op::IntDiv ? floor_div(n, d) : floor_mod(n, d));
    }
    case Op::Lt:
    case Op::Le:
    case Op::Ge:
    case Op::Gt: {
      auto x = eval_num(args[0], a);
      if (!x) return std::nullopt;
      auto y = eval_num(args[1], a);
      if (!y) return std::nullopt;
      bool r = false;
      switch (t.op()) {
        case Op::Lt: r = *x < *y; break;
        case Op::Le: r = *x <= *y; break;
        case Op::Ge: r = *x >= *y; break;
        default: r = *x > *y; break;
      }
      return Value::boolean(r);
    }
    case Op::Eq:
    case Op::Iff: {
      auto x = eval(args[0], a);
      if (!x) return std::nullopt;
      auto y = eval(args[1], a);
      if (!y) return std::nullopt;
      return Value::boolean(*x == *y);
    }
    case Op::Not: {
      auto x = eval_bool(args[0], a);
      if (!x) return std::nullopt;
      return Value::boolean(!*x);
    }
    case Op::And: {
      bool undefined = false;
      for (const auto& c : args) {
        auto x = eval_bool(c, a);
        if (!x) {
          undefined = true;
        } else if (!*x) {
          return Value::boolean(false);
        }
      }
      if (undefined) return std::nullopt;
      return Value::boolean(true);
    }
    case Op::Or: {
      bool undefined = false;
      for (const auto& c : args) {
        auto x = eval_bool(c, a);
        if (!x) {
          undefined = true;
        } else if (*x) {
          return Value::boolean(true);
        }
      }
      if (undefined) return std::nullopt;
      return Value::boolean(false);
    }
    case Op::Implies: {
      auto x = eval_bool(args[0], a);
      auto y = eval_bool(args[1], a);
      if ((x && !*x) || (y && *y)) return Value::boolean(true);
      if (!x || !y) return std::nullopt;
      return Value::boolean(false);
    }
    case Op::Ite: {
      auto c = eval_bool(args[0], a);
      if (!c) return std::nullopt;
      return eval(*c ? args[1] : args[2], a);
    }
    case Op::Apply:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Value> eval(const Term& t, const Assignment& a)
{
  switch (t.kind()) {
    case Term::Kind::Const:
      return t.value();
    case Term::Kind::Var: {
      if (t.timing() != Timing::Indexed) return std::nullopt;
      auto it = a.find(IndexedVar{t.name(), t.step()});
      if (it == a.end()) return std::nullopt;
      return it->second;
    }
    case Term::Kind::App:
      return eval_app(t, a);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Value> evaluate(const Term& f, const Assignment& a) { return eval(f, a); }

std::optional<bool> evaluate_bool(const Term& f, const Assignment& a)
{
  if (f.sort() != Sort::Bool) throw LogicError("evaluate_bool on non-bool term");
  return eval_bool(f, a);
}

Assignment slice(const Assignment& a, Step i)
{
  Assignment out;
  for (const auto& [v, val] : a) {
    if (v.step == i) out.emplace(IndexedVar{v.name, 0}, val);
  }
  return out;
}

Assignment restrict_to(const Assignment& a, const std::set<IndexedVar>& vars)
{
  Assignment out;
  for (const auto& v : vars) {
    if (auto it = a.find(v); it != a.end()) out.emplace(*it);
  }
  return out;
}

}  // namespace pk::logic
