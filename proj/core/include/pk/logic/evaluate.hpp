#pragma once

#include <map>
#include <optional>

#include "pk/logic/term.hpp"
#include "pk/logic/value.hpp"

namespace pk::logic {

/// Finite, possibly partial map from indexed variables to ground values.
using Assignment = std::map<IndexedVar, Value>;

/// Ground evaluation under exact arithmetic.
///
/// Returns nullopt (Undefined) when the value depends on a variable the
/// assignment does not bind. Connectives are evaluated three-valued: a false
/// conjunct decides an And even if a sibling is Undefined, and ite only looks
/// at the branch its condition selects. Current/Next variables and
/// uninterpreted applications are always Undefined.
std::optional<Value> evaluate(const Term& f, const Assignment& a);

/// Convenience for boolean formulas.
std::optional<bool> evaluate_bool(const Term& f, const Assignment& a);

/// The step-i slice of a, re-indexed to step 0.
Assignment slice(const Assignment& a, Step i);
/// Restriction of a to the given variables.
Assignment restrict_to(const Assignment& a, const std::set<IndexedVar>& vars);

}  // namespace pk::logic
