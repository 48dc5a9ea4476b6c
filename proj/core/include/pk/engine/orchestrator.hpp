#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "pk/engine/messages.hpp"
#include "pk/engine/options.hpp"
#include "pk/engine/verdict.hpp"
#include "pk/encoder/encoder.hpp"

namespace pk::engine {

struct RunStats {
  std::size_t checks_base = 0;
  std::size_t checks_step = 0;
  std::size_t checks_invgen = 0;
  /// Conjuncts carried by all M3 messages.
  std::size_t inv_emitted = 0;
  std::size_t inv_used = 0;
  /// Deepest step check attempted.
  Step step_k = 0;
  std::string invgen_end;
  std::chrono::duration<double> wall{0};
};

struct RunResult {
  Verdict verdict;
  RunStats stats;
  /// Every M3 message in send order.
  std::vector<Invariants> emissions;
};

/// Runs the base and step workers, plus the invariant generator unless the
/// mode is k-induct, each on its own thread with its own solver. Returns the
/// base worker's verdict once every worker has terminated.
RunResult orchestrate(const encoder::TransitionSystem& ts, const EngineOptions& opts);

}  // namespace pk::engine
