#include "pk/engine/trace.hpp"

#include "pk/logic/printer.hpp"

namespace pk::engine {

Trace extract_trace(const Assignment& model, const encoder::TransitionSystem& ts, Step k)
{
  Trace trace;
  trace.length = k + 1;
  for (Step i = 0; i <= k; ++i) {
    for (const auto& v : ts.vars) {
      auto it = model.find({v.name, i});
      if (it != model.end()) trace.values.emplace(it->first, it->second);
    }
  }

  // Recompute missing variables from their defining equations until nothing
  // changes, then fall back to sort defaults.
  bool progress = true;
  while (progress) {
    progress = false;
    for (Step i = 0; i <= k; ++i) {
      for (const auto& v : ts.vars) {
        logic::IndexedVar key{v.name, i};
        if (trace.values.count(key)) continue;
        auto def = ts.definitions.find(v.name);
        if (def == ts.definitions.end()) continue;
        const auto& rhs = i == 0 ? def->second.init_rhs : def->second.next_rhs;
        if (!rhs) continue;
        Term inst = i == 0 ? logic::instantiate_state(*rhs, 0) : logic::instantiate_trans(*rhs, i - 1);
        if (auto val = logic::evaluate(inst, trace.values)) {
          trace.values.emplace(key, *val);
          progress = true;
        }
      }
    }
  }
  for (Step i = 0; i <= k; ++i) {
    for (const auto& v : ts.vars) trace.values.emplace(logic::IndexedVar{v.name, i}, logic::Value::default_of(v.sort));
  }

  if (auto bad = validate_trace(ts, trace, ts.property())) {
    throw IncompletableModel("completed counterexample fails at step " + std::to_string(bad->step) + ": " + bad->what);
  }
  return trace;
}

std::optional<Violation> validate_trace(const encoder::TransitionSystem& ts, const Trace& trace, const Term& prop)
{
  if (trace.length == 0) return Violation{0, prop, "empty trace"};
  Step last = static_cast<Step>(trace.length - 1);
  for (Step i = 0; i <= last; ++i) {
    for (const auto& v : ts.vars) {
      auto it = trace.values.find({v.name, i});
      if (it == trace.values.end()) return Violation{i, logic::var(v.name, v.sort), "'" + v.name + "' has no value"};
      if (it->second.sort() != v.sort) return Violation{i, logic::var(v.name, v.sort), "'" + v.name + "' has the wrong sort"};
    }
  }
  if (logic::evaluate_bool(logic::instantiate_state(ts.init, 0), trace.values) != true) {
    return Violation{0, ts.init, "initial condition does not hold"};
  }
  for (Step i = 0; i < last; ++i) {
    if (logic::evaluate_bool(logic::instantiate_trans(ts.trans, i), trace.values) != true) {
      return Violation{i + 1, ts.trans, "transition relation does not hold"};
    }
  }
  if (logic::evaluate_bool(logic::instantiate_state(prop, last), trace.values) != false) {
    return Violation{last, prop, "property is not falsified"};
  }
  return std::nullopt;
}

std::vector<std::string> format_trace(const encoder::TransitionSystem& ts, const Trace& trace)
{
  std::vector<std::string> lines;
  for (Step i = 0; i < trace.length; ++i) {
    std::string line = "step " + std::to_string(i) + ":";
    for (const auto& v : ts.vars) {
      if (!v.visible()) continue;
      auto it = trace.values.find({v.name, i});
      line += " " + v.name + "=" + (it == trace.values.end() ? std::string("?") : it->second.to_string());
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace pk::engine
