#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pk/frontend/ast.hpp"

namespace pk::frontend {

enum class ErrorKind {
  Parse,
  Type,
  MissingDefinition,
  DuplicateDefinition,
  UnknownVariable,
  UnknownNode,
  Recursion,
  Causality,
  NoProperty,
};

std::string_view to_string(ErrorKind kind);

/// Every frontend failure. `what()` reads `line:col: kind: message`; `cycle`
/// lists the nodes (Recursion) or variables (Causality) of the offending loop.
class FrontendError : public std::runtime_error {
 public:
  FrontendError(ErrorKind kind, SourcePos pos, const std::string& message, std::vector<std::string> cycle = {});

  ErrorKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  ErrorKind kind_;
  SourcePos pos_;
  std::string message_;
  std::vector<std::string> cycle_;
};

}  // namespace pk::frontend
