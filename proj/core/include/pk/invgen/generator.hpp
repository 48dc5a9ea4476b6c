#pragma once

#include <cstddef>
#include <stop_token>
#include <string>
#include <vector>

#include "pk/engine/channel.hpp"
#include "pk/engine/messages.hpp"
#include "pk/invgen/candidates.hpp"
#include "pk/smt/session.hpp"

namespace pk::invgen {

enum class Version {
  A,  // two phases, one emission at the end
  B,  // emits the k-inductive part of the candidates for every k
};

struct GeneratorOptions {
  Version version = Version::B;
  /// Version B: send only conjuncts not sent in an earlier message.
  bool delta = true;
  Step max_k = 200;
  smt::SessionOptions solver;
  /// Counterexample rounds per entailment beyond the number of alive
  /// conjuncts before the round is declared stuck.
  std::size_t extra_rounds = 8;
};

struct GeneratorReport {
  std::vector<engine::Invariants> emissions;
  std::size_t checks = 0;
  Step final_k = 0;
  /// converged | stopped | max-k | stuck | solver-unknown | error
  std::string end_reason;
  std::string diagnostic;
};

/// Runs invariant generation over `candidates`, sending every result on `out`
/// and finishing with InvGenFinished. Stops early on M4 from `in` or when
/// `stop` fires; both are polled between solver checks.
GeneratorReport run_generator(const encoder::TransitionSystem& ts, CandidateSet candidates,
                              engine::Channel<engine::InvGenToStep>& out, engine::Channel<engine::BaseToInvGen>& in,
                              const GeneratorOptions& opts, std::stop_token stop);

}  // namespace pk::invgen
