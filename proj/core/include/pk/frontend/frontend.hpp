#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pk/frontend/ast.hpp"
#include "pk/frontend/error.hpp"

namespace pk::frontend {

/// Parses idealized Lustre source. Throws FrontendError(Parse) at the first
/// syntax violation.
Program parse(std::string_view source);

/// Resolves the main node, annotates every expression with its sort, enforces
/// the single-definition rule and the linear-arithmetic restrictions, and
/// resolves the property list.
///
/// Main node: `main_override`, else the `--%MAIN` pragma, else a node named
/// `main`, else the last node. Properties: the `--%PROPERTY` pragmas, else all
/// boolean outputs of the main node.
TypedProgram typecheck(const Program& program, const std::optional<std::string>& main_override = std::nullopt);

/// Replaces every node call reachable from the main node by a renamed copy of
/// the callee's equations. The result has a single node and no calls. Throws
/// Recursion for call cycles, UnknownNode, and Causality when the flattened
/// equations contain an instantaneous dependency cycle.
TypedProgram inline_calls(const TypedProgram& program);

/// parse + typecheck + inline_calls.
TypedProgram elaborate(std::string_view source, const std::optional<std::string>& main_override = std::nullopt);

/// Fully parenthesized Lustre text; parse(print(p)) is structurally equal to p.
std::string print(const Program& program);
std::string print(const Expr& e);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace pk::frontend
