#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pk/encoder/encoder.hpp"
#include "pk/logic/evaluate.hpp"

namespace pk::engine {

using logic::Assignment;
using logic::Step;
using logic::Term;

/// Finite execution: values of every state variable at steps 0..length-1,
/// keyed by indexed variable.
struct Trace {
  Assignment values;
  std::size_t length = 0;

  /// Values at step i, re-indexed to step 0.
  Assignment state(Step i) const { return logic::slice(values, i); }
};

struct Violation {
  Step step = 0;
  Term formula;
  std::string what;
};

/// Raised when completing a partial model with defaults breaks I or T.
class IncompletableModel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Trace of length k+1 from a counterexample to the depth-k base case.
/// Variables the model leaves out are recomputed from their defining
/// equations where possible and otherwise set to the sort default.
Trace extract_trace(const Assignment& model, const encoder::TransitionSystem& ts, Step k);

/// Checks, by evaluation only, that step 0 satisfies I, adjacent steps satisfy
/// T and the last step falsifies `prop`. Returns the first violation.
std::optional<Violation> validate_trace(const encoder::TransitionSystem& ts, const Trace& trace, const Term& prop);

/// `step <i>: var=value ...` lines for the visible variables.
std::vector<std::string> format_trace(const encoder::TransitionSystem& ts, const Trace& trace);

}  // namespace pk::engine
