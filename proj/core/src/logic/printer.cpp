#include "pk/logic/printer.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pk::logic {

namespace {

bool is_simple_symbol(const std::string& s)
{
  static const std::string extra = "~!@$%^&*_-+=<>.?/";
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && extra.find(c) == std::string::npos) return false;
  }
  static const char* reserved[] = {"true", "false", "and", "or", "not", "ite", "let", "div", "mod",
                                   "distinct", "assert", "par", "forall", "exists", "_", "!", "as"};
  return std::none_of(std::begin(reserved), std::end(reserved), [&](const char* r) { return s == r; });
}

std::string quoted(const std::string& s) { return is_simple_symbol(s) ? s : "|" + s + "|"; }

std::string smt_unsigned(const Rational& q, Sort s)
{
  const auto& num = numerator(q);
  const auto& den = denominator(q);
  if (s == Sort::Int) return num.str();
  if (den == 1) return num.str() + ".0";
  return "(/ " + num.str() + ".0 " + den.str() + ".0)";
}

void smt(std::ostream& os, const Term& t)
{
  switch (t.kind()) {
    case Term::Kind::Const:
      os << to_smtlib(t.value());
      return;
    case Term::Kind::Var:
      switch (t.timing()) {
        case Timing::Indexed: os << smt_symbol(t.name(), t.step()); break;
        case Timing::Current: os << quoted(t.name()); break;
        case Timing::Next: os << '|' << t.name() << "'|"; break;
      }
      return;
    case Term::Kind::App:
      break;
  }
  const auto args = t.args();
  std::string_view head;
  switch (t.op()) {
    case Op::Add: head = "+"; break;
    case Op::Sub: head = "-"; break;
    case Op::Neg: head = "-"; break;
    case Op::Mul: head = "*"; break;
    case Op::IntDiv: head = "div"; break;
    case Op::Mod: head = "mod"; break;
    case Op::Lt: head = "<"; break;
    case Op::Le: head = "<="; break;
    case Op::Eq: head = "="; break;
    case Op::Ge: head = ">="; break;
    case Op::Gt: head = ">"; break;
    case Op::Not: head = "not"; break;
    case Op::And:
      if (args.empty()) {
        os << "true";
        return;
      }
      head = "and";
      break;
    case Op::Or:
      if (args.empty()) {
        os << "false";
        return;
      }
      head = "or";
      break;
    case Op::Implies: head = "=>"; break;
    case Op::Iff: head = "="; break;
    case Op::Ite: head = "ite"; break;
    case Op::Apply:
      if (args.empty()) {
        os << quoted(t.function());
        return;
      }
      os << '(' << quoted(t.function());
      for (const auto& a : args) {
        os << ' ';
        smt(os, a);
      }
      os << ')';
      return;
  }
  if ((t.op() == Op::And || t.op() == Op::Or) && args.size() == 1) {
    smt(os, args[0]);
    return;
  }
  os << '(' << head;
  for (const auto& a : args) {
    os << ' ';
    smt(os, a);
  }
  os << ')';
}

// Infix printer -------------------------------------------------------------

int precedence(const Term& t)
{
  if (!t.is_app()) return 100;
  switch (t.op()) {
    case Op::Iff:
    case Op::Implies: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    case Op::Not: return 4;
    case Op::Lt:
    case Op::Le:
    case Op::Eq:
    case Op::Ge:
    case Op::Gt: return 5;
    case Op::Add:
    case Op::Sub: return 6;
    case Op::Mul:
    case Op::IntDiv:
    case Op::Mod: return 7;
    case Op::Neg: return 8;
    case Op::Ite:
    case Op::Apply: return 100;
  }
  return 100;
}

void infix(std::ostream& os, const Term& t);

void child(std::ostream& os, const Term& c, int min_prec)
{
  bool parens = precedence(c) < min_prec;
  if (!parens && c.is_const() && is_numeric(c.sort()) && c.value().as_rational() < 0) parens = true;
  if (parens) os << '(';
  infix(os, c);
  if (parens) os << ')';
}

void infix(std::ostream& os, const Term& t)
{
  switch (t.kind()) {
    case Term::Kind::Const:
      os << t.value().to_string();
      return;
    case Term::Kind::Var:
      os << t.name();
      if (t.timing() == Timing::Indexed) os << '@' << t.step();
      if (t.timing() == Timing::Next) os << '\'';
      return;
    case Term::Kind::App:
      break;
  }
  const auto args = t.args();
  const int p = precedence(t);
  auto binary = [&](std::string_view sym, bool left_assoc) {
    child(os, args[0], left_assoc ? p : p + 1);
    os << ' ' << sym << ' ';
    child(os, args[1], p + 1);
  };
  switch (t.op()) {
    case Op::Add: binary("+", true); return;
    case Op::Sub: binary("-", true); return;
    case Op::Mul: binary("*", true); return;
    case Op::IntDiv: binary("div", true); return;
    case Op::Mod: binary("mod", true); return;
    case Op::Lt: binary("<", false); return;
    case Op::Le: binary("<=", false); return;
    case Op::Eq: binary("=", false); return;
    case Op::Ge: binary(">=", false); return;
    case Op::Gt: binary(">", false); return;
    case Op::Implies: binary("=>", false); return;
    case Op::Iff: binary("<=>", false); return;
    case Op::Neg:
      os << '-';
      child(os, args[0], p + 1);
      return;
    case Op::Not:
      os << "not ";
      child(os, args[0], p);
      return;
    case Op::And:
    case Op::Or: {
      if (args.empty()) {
        os << (t.op() == Op::And ? "true" : "false");
        return;
      }
      const char* sym = t.op() == Op::And ? " and " : " or ";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) os << sym;
        child(os, args[i], p + 1);
      }
      return;
    }
    case Op::Ite:
    case Op::Apply: {
      os << (t.op() == Op::Ite ? std::string("ite") : t.function()) << '(';
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) os << ", ";
        infix(os, args[i]);
      }
      os << ')';
      return;
    }
  }
}

}  // namespace

std::string smt_symbol(const std::string& name, Step step) { return name + "$" + std::to_string(step); }

std::string to_smtlib(Sort s)
{
  switch (s) {
    case Sort::Bool: return "Bool";
    case Sort::Int: return "Int";
    case Sort::Real: return "Real";
  }
  return "Bool";
}

std::string to_smtlib(const Value& v)
{
  if (v.sort() == Sort::Bool) return v.as_bool() ? "true" : "false";
  const Rational& q = v.as_rational();
  if (q < 0) return "(- " + smt_unsigned(-q, v.sort()) + ")";
  return smt_unsigned(q, v.sort());
}

std::string to_smtlib(const Term& t)
{
  std::ostringstream os;
  smt(os, t);
  return os.str();
}

std::string to_string(const Term& t)
{
  std::ostringstream os;
  infix(os, t);
  return os.str();
}

}  // namespace pk::logic
