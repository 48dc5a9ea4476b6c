#pragma once

#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <vector>

#include "pk/logic/evaluate.hpp"
#include "pk/logic/term.hpp"
#include "pk/smt/sexpr.hpp"
#include "pk/smt/subprocess.hpp"

namespace pk::smt {

using logic::Assignment;
using logic::Term;

/// The solver rejected the session configuration.
class HandshakeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unexpected or error response, or the solver died.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model value the session cannot read exactly.
class ModelParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The owner's stop token fired during a solver call.
class Stopped : public std::runtime_error {
 public:
  Stopped() : std::runtime_error("stopped") {}
};

struct SessionOptions {
  std::string command = "z3 -in";
  /// Wall-clock limit per satisfiability check; zero means none.
  std::chrono::milliseconds check_timeout{0};
  /// When set, the wire dialogue is appended to `<dump_dir>/<name>.smt2`.
  std::string dump_dir;
  std::string name = "session";
  /// Re-evaluate every returned model against the asserted formulas.
  bool validate_models =
#ifdef NDEBUG
      false;
#else
      true;
#endif
};

struct CheckResult {
  enum class Kind { Entailed, NotEntailed, Unknown };

  Kind kind = Kind::Unknown;
  /// Values of every declared variable (NotEntailed only).
  Assignment model;
  /// "timeout" or "solver-unknown" (Unknown only).
  std::string reason;

  bool entailed() const { return kind == Kind::Entailed; }
  bool refuted() const { return kind == Kind::NotEntailed; }
};

struct SessionStats {
  std::size_t checks = 0;
  std::size_t asserts = 0;
  std::size_t resets = 0;
  std::size_t timeouts = 0;
  std::size_t restarts = 0;
  std::chrono::duration<double> check_time{0};
};

/// One solver process speaking SMT-LIB 2 over pipes. Single owner.
class SolverSession {
 public:
  /// Spawns the solver and negotiates print-success, model production,
  /// global declarations and push/pop support. Throws SpawnError or
  /// HandshakeError.
  static SolverSession open(const SessionOptions& options, std::stop_token stop = {});

  SolverSession(SolverSession&&) noexcept;
  SolverSession& operator=(SolverSession&&) noexcept;
  ~SolverSession();

  /// Adds f to the asserted set, declaring new indexed variables first.
  void assert_formula(const Term& f);
  /// Whether the asserted formulas plus `assumptions` entail f. The
  /// assumptions are scoped to this call; the asserted set is unchanged.
  CheckResult entailed(const Term& f, std::span<const Term> assumptions = {});
  /// Empties the asserted set; declarations are kept.
  void reset();

  const std::vector<Term>& asserted() const { return asserted_; }
  const SessionStats& stats() const { return stats_; }
  const SessionOptions& options() const { return options_; }
  void set_stop_token(std::stop_token stop) { stop_ = std::move(stop); }
  /// Terminates the solver process.
  void close();

 private:
  struct Declared {
    std::string name;
    logic::Step step;
    logic::Sort sort;
  };

  SolverSession(SessionOptions options, std::stop_token stop);

  void start();
  void handshake();
  void declare_new(const Term& f);
  void send(const std::string& command);
  SExpr read_response(std::optional<std::chrono::steady_clock::time_point> deadline);
  /// nullopt when the deadline passes first.
  std::optional<SExpr> read_response_until(std::optional<std::chrono::steady_clock::time_point> deadline);
  void expect_success(const std::string& command);
  Assignment read_model();
  void restart();
  void log(const std::string& text);

  SessionOptions options_;
  std::stop_token stop_;
  Subprocess proc_;
  SExprReader reader_;
  std::vector<Term> asserted_;
  std::set<Term, logic::TermLess> asserted_set_;
  std::vector<Declared> declared_;
  std::set<logic::IndexedVar> declared_set_;
  SessionStats stats_;
  std::unique_ptr<std::ofstream> dump_;
};

}  // namespace pk::smt
