#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "pk/encoder/term_pool.hpp"
#include "pk/invgen/candidates.hpp"
#include "pk/smt/session.hpp"

namespace pk::engine {

using logic::Step;

enum class Mode {
  KInduct,   // base + step
  NoIncInv,  // plus a two-phase invariant generator
  IncInv,    // plus an incremental invariant generator
};

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

struct EngineOptions {
  Mode mode = Mode::IncInv;
  /// Global wall-clock limit.
  std::chrono::duration<double> timeout{100.0};
  Step max_k = 200;
  bool path_compression = false;
  smt::SessionOptions solver;
  encoder::PoolCaps caps;
  invgen::TemplateChoice templates;
  /// Send only conjuncts not sent before.
  bool inv_delta = true;
  /// Artificial delay before every inductive step check (instrumentation).
  std::chrono::milliseconds step_delay{0};
};

}  // namespace pk::engine
