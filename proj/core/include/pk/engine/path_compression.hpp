#pragma once

#include <vector>

#include "pk/encoder/encoder.hpp"

namespace pk::engine {

using logic::Step;
using logic::Term;

/// x̄ᵢ = x̄ⱼ over all state variables.
Term states_equal(const encoder::TransitionSystem& ts, Step i, Step j);

/// Constraints first needed when the path reaches step j ≥ 1:
/// ¬(x̄ᵢ = x̄ⱼ) for every i < j, then ¬I(x̄ⱼ).
std::vector<Term> compression_at(const encoder::TransitionSystem& ts, Step j);

/// All constraints for a step check at depth k: compression_at(j) for
/// j = 1..k+1.
std::vector<Term> path_compression_constraints(const encoder::TransitionSystem& ts, Step k);

}  // namespace pk::engine
