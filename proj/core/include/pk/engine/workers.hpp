#pragma once

#include <cstddef>
#include <stop_token>

#include "pk/engine/channel.hpp"
#include "pk/engine/messages.hpp"
#include "pk/engine/options.hpp"
#include "pk/engine/verdict.hpp"

namespace pk::engine {

struct BaseReport {
  Verdict verdict;
  std::size_t checks = 0;
  /// Deepest base check that succeeded, if any.
  std::optional<Step> checked_through;
};

struct StepReport {
  std::size_t checks = 0;
  std::size_t invariants_received = 0;
  /// Depth of the last step check attempted.
  Step last_k = 0;
  bool proved = false;
};

/// Bounded model checking from I for k = 0, 1, ... . Returns Invalid on the
/// first counterexample; Valid(n) once M1(n) has arrived and the base case
/// holds for every k ≤ n. Sends M2 and M4 before returning.
BaseReport run_base(const encoder::TransitionSystem& ts, const Term& prop, Channel<StepToBase>& inbox,
                    Channel<BaseToStep>& to_step, Channel<BaseToInvGen>& to_invgen, const EngineOptions& opts,
                    std::stop_token stop);

/// Inductive step checks for k = 0, 1, ..., strengthened by invariants
/// received from the generator. Sends M1 on success and then idles until M2.
/// `expect_invariants` says whether an invariant generator is running.
StepReport run_step(const encoder::TransitionSystem& ts, const Term& prop, Channel<BaseToStep>& inbox,
                    Channel<InvGenToStep>& invariants, Channel<StepToBase>& to_base, const EngineOptions& opts,
                    bool expect_invariants, std::stop_token stop);

}  // namespace pk::engine
