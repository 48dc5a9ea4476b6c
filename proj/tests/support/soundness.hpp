#pragma once

#include <optional>
#include <string>

#include "pk/encoder/encoder.hpp"
#include "pk/engine/verdict.hpp"
#include "pk/frontend/ast.hpp"

namespace pk::testing {

struct SoundnessDepths {
  /// Unrolling depth used to look for a counterexample to a Valid verdict.
  std::size_t bmc = 30;
  /// Interpreter search depth for the same purpose.
  std::size_t explore = 5;
};

/// Checks a verdict against independent oracles. Invalid: the trace satisfies
/// I and T, falsifies the property only at its last step, and replaying its
/// inputs through the stream interpreter reproduces every visible value.
/// Valid: neither bounded unrolling nor interpreter search finds a violation.
/// Returns a description of the first problem found.
std::optional<std::string> check_verdict(const frontend::TypedProgram& program, const encoder::TransitionSystem& ts,
                                         const engine::Verdict& verdict, const SoundnessDepths& depths = {});

}  // namespace pk::testing
