#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "pk/logic/term.hpp"

namespace pk::engine {

using logic::Step;
using logic::Term;

/// M1: the inductive step succeeded at depth k.
struct StepProved {
  Step k = 0;
  std::size_t invariants_used = 0;
};

/// The step worker stopped without a proof (depth bound or solver failure).
struct StepGaveUp {
  Step k = 0;
  std::string reason;
  std::string diagnostic;
};

/// M2: the base worker has returned a verdict.
struct BaseTerminated {};

/// M3: invariants of the system, each k-inductive for k = proved_at_k.
struct Invariants {
  std::vector<Term> formulas;
  std::vector<std::size_t> ids;
  Step proved_at_k = 0;
};

/// The invariant generator has finished and will send nothing more.
struct InvGenFinished {
  std::string reason;
};

/// M4: stop generating invariants.
struct StopInvGen {};

using StepToBase = std::variant<StepProved, StepGaveUp>;
using BaseToStep = BaseTerminated;
using InvGenToStep = std::variant<Invariants, InvGenFinished>;
using BaseToInvGen = StopInvGen;

}  // namespace pk::engine
