#pragma once

#include <optional>
#include <set>
#include <vector>

#include "pk/encoder/encoder.hpp"
#include "pk/smt/session.hpp"
#include "support/stream_interp.hpp"

namespace pk::testing {

struct Exploration {
  /// Fewest steps after the first instant to a property violation.
  std::optional<std::size_t> violation_depth;
  /// Every valuation of the node's variables seen in a reachable instant.
  std::set<Valuation> reachable;
  /// No new interpreter state appeared: `reachable` is the full set.
  bool complete = false;
  std::size_t depth_explored = 0;
};

/// Breadth-first search over interpreter states, up to `max_depth` steps
/// after the first instant. Int inputs (and `pre` at the first instant)
/// range over `int_domain`, reals over `real_domain`, bools over both
/// values.
Exploration explore(const StreamInterpreter& interp, std::size_t max_depth, const std::vector<Value>& int_domain,
                    const std::vector<Value>& real_domain = {Value::real(0)});

/// {-1, 0, 1} plus every integer literal of the program and its neighbours.
std::vector<Value> int_domain_of(const frontend::Program& program);

/// Depth of the first violation of `prop` within `depth` steps, found by
/// plain unrolling in a fresh solver session.
std::optional<std::size_t> bmc(const encoder::TransitionSystem& ts, const logic::Term& prop, std::size_t depth,
                               const smt::SessionOptions& solver = {});

/// Whether some assignment to the hidden (non-visible) variables extends
/// `run` to a model of I@0 and T@0..n-2.
bool encoding_admits(const encoder::TransitionSystem& ts, const std::vector<Valuation>& run,
                     const smt::SessionOptions& solver = {});

/// Same question answered by evaluation alone; nullopt when the system has
/// hidden variables.
std::optional<bool> encoding_admits_by_eval(const encoder::TransitionSystem& ts, const std::vector<Valuation>& run);

}  // namespace pk::testing
