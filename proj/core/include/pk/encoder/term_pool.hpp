#pragma once

#include <cstddef>
#include <vector>

#include "pk/encoder/encoder.hpp"

namespace pk::encoder {

struct PoolCaps {
  std::size_t int_terms = 60;
  std::size_t bool_terms = 60;
  /// Also harvest subterms of the property formulas.
  bool from_property = false;
};

/// Terms over the state variables used to instantiate invariant templates.
struct TermPool {
  std::vector<Term> int_terms;
  std::vector<Term> bool_terms;
};

/// Collects, in priority order, state variables, non-constant subterms of I
/// and of T read without primes (shallow first, then by first occurrence) and
/// constants (0, 1 and the program's integer constants ascending; true and
/// false if it occurs). Definitional equations and terms over Fresh variables
/// are skipped.
TermPool harvest_terms(const TransitionSystem& ts, const PoolCaps& caps = {});

}  // namespace pk::encoder
