#pragma once

#include <string>

#include "pk/logic/term.hpp"

namespace pk::logic {

/// SMT-LIB 2 rendering. Indexed variables print as `name$step`, Current
/// variables as their bare (possibly |quoted|) name and Next variables as
/// `|name'|`.
std::string to_smtlib(const Term& t);
std::string to_smtlib(const Value& v);
std::string to_smtlib(Sort s);
std::string smt_symbol(const std::string& name, Step step);

/// Infix rendering for diagnostics: `x@1 = x@0 + 1`, `x' = ite(x = 3, 0, x + 1)`.
std::string to_string(const Term& t);

}  // namespace pk::logic
