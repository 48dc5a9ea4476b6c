#include <sstream>

#include "pk/frontend/frontend.hpp"

namespace pk::frontend {

namespace {

// Exact decimal text for q when its denominator has only factors 2 and 5.
std::string decimal(const Rational& q)
{
  Integer num = abs(numerator(q));
  Integer den = denominator(q);
  Integer d = den;
  unsigned twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  std::string sign = q < 0 ? "-" : "";
  if (d != 1) {
    // Not a finite decimal; fall back to an explicit quotient of decimals.
    return "(" + sign + num.str() + ".0 / " + den.str() + ".0)";
  }
  unsigned digits = std::max(twos, fives);
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Integer scaled = num * (scale / den);
  std::string s = scaled.str();
  if (digits == 0) return sign + s + ".0";
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  return sign + s;
}

const char* sort_name(Sort s)
{
  switch (s) {
    case Sort::Bool: return "bool";
    case Sort::Int: return "int";
    case Sort::Real: return "real";
  }
  return "bool";
}

void expr(std::ostream& os, const Expr& e)
{
  switch (e.kind) {
    case ExprKind::BoolLit:
      os << (e.boolean ? "true" : "false");
      return;
    case ExprKind::IntLit:
      if (e.number < 0) {
        os << "(- " << (-numerator(e.number)).str() << ")";
      } else {
        os << numerator(e.number).str();
      }
      return;
    case ExprKind::RealLit:
      if (e.number < 0) {
        os << "(- " << decimal(-e.number) << ")";
      } else {
        os << decimal(e.number);
      }
      return;
    case ExprKind::Var:
      os << e.name;
      return;
    case ExprKind::Unary:
      os << (e.unary == UnaryOp::Neg ? "(- " : "(not ");
      expr(os, e.args[0]);
      os << ')';
      return;
    case ExprKind::Binary:
      os << '(';
      expr(os, e.args[0]);
      os << ' ' << to_string(e.binary) << ' ';
      expr(os, e.args[1]);
      os << ')';
      return;
    case ExprKind::Arrow:
      os << '(';
      expr(os, e.args[0]);
      os << " -> ";
      expr(os, e.args[1]);
      os << ')';
      return;
    case ExprKind::Pre:
      os << "(pre ";
      expr(os, e.args[0]);
      os << ')';
      return;
    case ExprKind::Ite:
      os << "(if ";
      expr(os, e.args[0]);
      os << " then ";
      expr(os, e.args[1]);
      os << " else ";
      expr(os, e.args[2]);
      os << ')';
      return;
    case ExprKind::Call:
      os << e.name << '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) os << ", ";
        expr(os, e.args[i]);
      }
      os << ')';
      return;
  }
}

void decls(std::ostream& os, const std::vector<VarDecl>& ds, const char* sep)
{
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) os << sep;
    os << ds[i].name << ": " << sort_name(ds[i].sort);
  }
}

}  // namespace

std::string print(const Expr& e)
{
  std::ostringstream os;
  expr(os, e);
  return os.str();
}

std::string print(const Program& program)
{
  std::ostringstream os;
  if (program.main) os << "--%MAIN " << program.main->name << ";\n";
  for (const auto& n : program.nodes) {
    os << "node " << n.name << "(";
    decls(os, n.inputs, "; ");
    os << ") returns (";
    decls(os, n.outputs, "; ");
    os << ");\n";
    if (!n.locals.empty()) {
      os << "var\n";
      for (const auto& d : n.locals) os << "  " << d.name << ": " << sort_name(d.sort) << ";\n";
    }
    os << "let\n";
    for (const auto& eq : n.equations) {
      os << "  ";
      if (eq.lhs.size() == 1) {
        os << eq.lhs.front();
      } else {
        os << '(';
        for (std::size_t i = 0; i < eq.lhs.size(); ++i) {
          if (i) os << ", ";
          os << eq.lhs[i];
        }
        os << ')';
      }
      os << " = ";
      expr(os, eq.rhs);
      os << ";\n";
    }
    os << "tel\n\n";
  }
  for (const auto& p : program.properties) os << "--%PROPERTY " << p.name << ";\n";
  return os.str();
}

}  // namespace pk::frontend
