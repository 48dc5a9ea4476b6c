#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pk/frontend/ast.hpp"
#include "pk/logic/term.hpp"

namespace pk::encoder {

using logic::Sort;
using logic::Term;

/// Contract violation in the encoder input (e.g. a residual node call).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class VarRole : std::uint8_t {
  Input,   // unconstrained every step
  Output,
  Local,
  Aux,     // introduced for `pre e` with e not a variable
  Fresh,   // value of a `pre` at the first instant
};

struct StateVar {
  std::string name;
  Sort sort = Sort::Bool;
  VarRole role = VarRole::Local;

  /// Variables a user wrote in the main node (inputs, outputs, locals).
  bool visible() const;
};

/// A variable's defining equation in each reading: `v = init_rhs` is a
/// conjunct of I and `v' = next_rhs` a conjunct of T.
struct Definition {
  std::optional<Term> init_rhs;
  std::optional<Term> next_rhs;
};

struct TransitionSystem {
  std::vector<StateVar> vars;
  Term init;
  Term trans;
  std::vector<Term> properties;
  std::vector<std::string> property_names;
  std::map<std::string, Definition> definitions;

  /// Builds a system from raw formulas; definitions are recovered from the
  /// top-level conjuncts of I and T of the form `v = e` / `v' = e`.
  static TransitionSystem make(std::vector<StateVar> vars, Term init, Term trans, std::vector<Term> properties,
                               std::vector<std::string> property_names = {});

  const StateVar* find(const std::string& name) const;
  std::map<std::string, Sort> state_vars() const;
  /// Conjunction of all properties.
  Term property() const;
  /// Same system checked against a different property.
  TransitionSystem with_property(Term p, std::string name = "P") const;
};

/// Builds (I, T, properties) from an inlined, type-checked program.
TransitionSystem encode(const frontend::TypedProgram& program);

/// SMT-LIB text declaring the state variables and their primed copies and
/// defining I, T and each property.
std::string dump_smtlib(const TransitionSystem& ts);

/// Checks that I, T and the properties only mention declared variables;
/// returns a description of the first problem.
std::optional<std::string> check_well_formed(const TransitionSystem& ts);

}  // namespace pk::encoder
