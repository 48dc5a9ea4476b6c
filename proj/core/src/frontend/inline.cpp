#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pk/frontend/frontend.hpp"

namespace pk::frontend {

namespace {

void collect_calls(const Expr& e, std::vector<std::pair<std::string, SourcePos>>& out)
{
  if (e.kind == ExprKind::Call) out.emplace_back(e.name, e.pos);
  for (const auto& a : e.args) collect_calls(a, out);
}

void check_recursion(const Program& p, const std::string& main)
{
  enum class Mark { None, Active, Done };
  std::map<std::string, Mark> mark;
  std::vector<std::string> stack;

  std::function<void(const std::string&)> visit = [&](const std::string& name) {
    const Node* n = p.find_node(name);
    mark[name] = Mark::Active;
    stack.push_back(name);
    std::vector<std::pair<std::string, SourcePos>> calls;
    for (const auto& eq : n->equations) collect_calls(eq.rhs, calls);
    for (const auto& [callee, pos] : calls) {
      if (!p.find_node(callee)) throw FrontendError(ErrorKind::UnknownNode, pos, "call to unknown node '" + callee + "'");
      Mark m = mark[callee];
      if (m == Mark::Active) {
        auto it = std::find(stack.begin(), stack.end(), callee);
        std::vector<std::string> cycle(it, stack.end());
        std::string text;
        for (const auto& c : cycle) text += c + " -> ";
        throw FrontendError(ErrorKind::Recursion, pos, "recursive call cycle " + text + callee, cycle);
      }
      if (m == Mark::None) visit(callee);
    }
    stack.pop_back();
    mark[name] = Mark::Done;
  };
  visit(main);
}

class Inliner {
 public:
  explicit Inliner(const Program& p) : program_(p) {}

  Node run(const Node& main)
  {
    Node out;
    out.name = main.name;
    out.inputs = main.inputs;
    out.outputs = main.outputs;
    out.locals = main.locals;
    out.pos = main.pos;
    locals_ = &out.locals;
    equations_ = &out.equations;
    body(main, "");
    return out;
  }

 private:
  // Emits the equations of `node` with every variable prefixed by `prefix`.
  void body(const Node& node, const std::string& prefix)
  {
    for (const auto& eq : node.equations) {
      if (eq.lhs.size() == 1) {
        Expr rhs = rewrite(eq.rhs, prefix);
        equations_->push_back({{prefix + eq.lhs.front()}, std::move(rhs), eq.pos});
        continue;
      }
      std::vector<std::string> outs = instance(eq.rhs, prefix);
      for (std::size_t i = 0; i < eq.lhs.size(); ++i) {
        Expr v = Expr::variable(outs[i], eq.pos);
        v.sort = node.find_var(eq.lhs[i])->sort;
        equations_->push_back({{prefix + eq.lhs[i]}, std::move(v), eq.pos});
      }
    }
  }

  // Inlines one call; returns the renamed output variables.
  std::vector<std::string> instance(const Expr& call, const std::string& prefix)
  {
    const Node* callee = program_.find_node(call.name);
    if (!callee) throw FrontendError(ErrorKind::UnknownNode, call.pos, "call to unknown node '" + call.name + "'");
    std::vector<Expr> args;
    for (const auto& a : call.args) args.push_back(rewrite(a, prefix));

    std::string inner = callee->name + "." + std::to_string(++counter_) + ".";
    for (const auto* group : {&callee->inputs, &callee->outputs, &callee->locals}) {
      for (const auto& d : *group) locals_->push_back({inner + d.name, d.sort, call.pos});
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      equations_->push_back({{inner + callee->inputs[i].name}, std::move(args[i]), call.pos});
    }
    body(*callee, inner);
    std::vector<std::string> outs;
    for (const auto& o : callee->outputs) outs.push_back(inner + o.name);
    return outs;
  }

  Expr rewrite(const Expr& e, const std::string& prefix)
  {
    if (e.kind == ExprKind::Call) {
      auto outs = instance(e, prefix);
      Expr v = Expr::variable(outs.front(), e.pos);
      v.sort = e.sort;
      return v;
    }
    Expr out = e;
    if (e.kind == ExprKind::Var) out.name = prefix + e.name;
    for (auto& a : out.args) a = rewrite(a, prefix);
    return out;
  }

  const Program& program_;
  std::vector<VarDecl>* locals_ = nullptr;
  std::vector<Equation>* equations_ = nullptr;
  unsigned counter_ = 0;
};

void instant_deps(const Expr& e, std::set<std::string>& out)
{
  if (e.kind == ExprKind::Pre) return;
  if (e.kind == ExprKind::Var) out.insert(e.name);
  for (const auto& a : e.args) instant_deps(a, out);
}

void check_causality(const Node& node)
{
  std::map<std::string, std::pair<std::set<std::string>, SourcePos>> deps;
  for (const auto& eq : node.equations) {
    auto& entry = deps[eq.lhs.front()];
    instant_deps(eq.rhs, entry.first);
    entry.second = eq.pos;
  }
  enum class Mark { None, Active, Done };
  std::map<std::string, Mark> mark;
  std::vector<std::string> stack;
  std::function<void(const std::string&)> visit = [&](const std::string& v) {
    mark[v] = Mark::Active;
    stack.push_back(v);
    auto it = deps.find(v);
    if (it != deps.end()) {
      for (const auto& d : it->second.first) {
        Mark m = mark[d];
        if (m == Mark::Active) {
          auto start = std::find(stack.begin(), stack.end(), d);
          std::vector<std::string> cycle(start, stack.end());
          std::string text;
          for (const auto& c : cycle) text += c + " -> ";
          throw FrontendError(ErrorKind::Causality, deps[d].second, "instantaneous dependency cycle " + text + d,
                              cycle);
        }
        if (m == Mark::None) visit(d);
      }
    }
    stack.pop_back();
    mark[v] = Mark::Done;
  };
  for (const auto& eq : node.equations) {
    if (mark[eq.lhs.front()] == Mark::None) visit(eq.lhs.front());
  }
}

}  // namespace

TypedProgram inline_calls(const TypedProgram& program)
{
  const Node& main = program.main_node();
  check_recursion(program.program, main.name);
  TypedProgram out;
  out.main = program.main;
  out.properties = program.properties;
  out.program.properties = program.program.properties;
  out.program.main = program.program.main;
  out.program.nodes.push_back(Inliner(program.program).run(main));
  check_causality(out.program.nodes.front());
  return out;
}

}  // namespace pk::frontend
