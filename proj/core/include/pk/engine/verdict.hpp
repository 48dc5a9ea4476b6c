#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "pk/engine/trace.hpp"

namespace pk::engine {

struct Verdict {
  enum class Kind { Valid, Invalid, Unknown };

  Kind kind = Kind::Unknown;
  /// Depth of the successful induction (Valid) or of the counterexample (Invalid).
  Step k = 0;
  std::size_t invariants_used = 0;
  Trace trace;
  /// timeout | solver-unknown | max-k | internal-error
  std::string reason;
  /// Human-readable detail for Unknown verdicts.
  std::string diagnostic;
  /// The solver could not be started or configured.
  bool solver_failure = false;

  static Verdict valid(Step k, std::size_t invariants_used);
  static Verdict invalid(Step k, Trace trace);
  static Verdict unknown(std::string reason, std::string diagnostic = {});
};

std::string_view to_string(Verdict::Kind kind);

/// `VALID k=<n> invariants=<m>`, `INVALID k=<n>` or `UNKNOWN reason=<r>`.
std::string headline(const Verdict& v);

}  // namespace pk::engine
