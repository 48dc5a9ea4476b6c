#include "pk/smt/session.hpp"

#include <filesystem>

#include "pk/logic/printer.hpp"

namespace pk::smt {

using namespace std::chrono_literals;
using Clock = std::chrono::steady_clock;

namespace {

constexpr auto kPollSlice = 20ms;

logic::Rational parse_number(const SExpr& e)
{
  if (!e.is_list) {
    auto q = logic::parse_rational(e.atom);
    if (!q) throw ModelParseError("unreadable model value '" + e.atom + "'");
    return *q;
  }
  if (e.items.size() == 2 && e.items[0].is_atom("-")) return -parse_number(e.items[1]);
  if (e.items.size() == 3 && e.items[0].is_atom("/")) {
    auto d = parse_number(e.items[2]);
    if (d == 0) throw ModelParseError("division by zero in model value '" + e.to_string() + "'");
    return parse_number(e.items[1]) / d;
  }
  throw ModelParseError("unsupported model value '" + e.to_string() + "'");
}

logic::Value parse_value(const SExpr& e, logic::Sort sort)
{
  if (sort == logic::Sort::Bool) {
    if (e.is_atom("true")) return logic::Value::boolean(true);
    if (e.is_atom("false")) return logic::Value::boolean(false);
    throw ModelParseError("expected a boolean model value, got '" + e.to_string() + "'");
  }
  logic::Rational q = parse_number(e);
  if (sort == logic::Sort::Int) {
    if (!logic::is_integral(q)) throw ModelParseError("non-integral value '" + e.to_string() + "' for an int");
    return logic::Value::integer(numerator(q));
  }
  return logic::Value::real(q);
}

std::optional<SExpr> read_one(SExprReader& reader)
{
  try {
    return reader.next();
  } catch (const std::runtime_error& e) {
    throw ProtocolError(e.what());
  }
}

}  // namespace

SolverSession::SolverSession(SessionOptions options, std::stop_token stop)
    : options_(std::move(options)), stop_(std::move(stop))
{
}

SolverSession::SolverSession(SolverSession&&) noexcept = default;
SolverSession& SolverSession::operator=(SolverSession&&) noexcept = default;
SolverSession::~SolverSession() = default;

SolverSession SolverSession::open(const SessionOptions& options, std::stop_token stop)
{
  SolverSession s(options, std::move(stop));
  if (!options.dump_dir.empty()) {
    std::filesystem::create_directories(options.dump_dir);
    auto path = std::filesystem::path(options.dump_dir) / (options.name + ".smt2");
    s.dump_ = std::make_unique<std::ofstream>(path, std::ios::trunc);
  }
  s.start();
  return s;
}

void SolverSession::start()
{
  proc_ = Subprocess::spawn(split_command(options_.command));
  reader_.clear();
  handshake();
}

void SolverSession::handshake()
{
  const char* commands[] = {
      "(set-option :print-success true)",
      "(set-option :produce-models true)",
      "(set-option :global-declarations true)",
      "(set-logic ALL)",
      "(push 1)",
      "(pop 1)",
  };
  for (const char* c : commands) {
    send(c);
    SExpr r;
    try {
      auto got = read_response_until(Clock::now() + 10s);
      if (!got) throw HandshakeError("solver did not answer '" + std::string(c) + "'");
      r = *got;
    } catch (const ProtocolError& e) {
      throw HandshakeError(std::string("solver failed during '") + c + "': " + e.what());
    }
    if (!r.is_atom("success")) {
      throw HandshakeError("solver rejected '" + std::string(c) + "': " + r.to_string());
    }
  }
}

void SolverSession::log(const std::string& text)
{
  if (dump_) *dump_ << text << '\n' << std::flush;
}

void SolverSession::send(const std::string& command)
{
  log(command);
  if (!proc_.write(command + "\n")) throw ProtocolError("solver closed its input");
}

SExpr SolverSession::read_response(std::optional<Clock::time_point> deadline)
{
  std::optional<SExpr> r = read_response_until(deadline);
  if (!r) throw ProtocolError("solver response timed out");
  return *r;
}

std::optional<SExpr> SolverSession::read_response_until(std::optional<Clock::time_point> deadline)
{
  while (true) {
    if (auto e = read_one(reader_)) {
      if (dump_) log("; " + e->to_string());
      return e;
    }
    if (stop_.stop_requested()) {
      proc_.kill();
      throw Stopped();
    }
    auto slice = std::chrono::duration_cast<std::chrono::milliseconds>(kPollSlice);
    if (deadline) {
      auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*deadline - Clock::now());
      if (left <= 0ms) return std::nullopt;
      slice = std::min(slice, left);
    }
    std::string chunk;
    auto st = proc_.read_some(chunk, slice);
    if (st == Subprocess::ReadStatus::Eof) {
      proc_.kill();
      throw ProtocolError("solver exited unexpectedly");
    }
    if (st == Subprocess::ReadStatus::Data) reader_.feed(chunk);
  }
}

void SolverSession::expect_success(const std::string& command)
{
  send(command);
  SExpr r = read_response(std::nullopt);
  if (!r.is_atom("success")) throw ProtocolError("solver answered '" + r.to_string() + "' to " + command);
}

void SolverSession::declare_new(const Term& f)
{
  for (const auto& v : logic::free_indexed_vars(f)) {
    if (declared_set_.count(v)) continue;
    logic::Sort sort = logic::Sort::Bool;
    logic::visit_subterms(f, [&](const Term& t) {
      if (t.is_var() && t.timing() == logic::Timing::Indexed && t.name() == v.name && t.step() == v.step) {
        sort = t.sort();
        return false;
      }
      return true;
    });
    expect_success("(declare-fun " + logic::smt_symbol(v.name, v.step) + " () " + logic::to_smtlib(sort) + ")");
    declared_set_.insert(v);
    declared_.push_back({v.name, v.step, sort});
  }
}

void SolverSession::assert_formula(const Term& f)
{
  if (f.sort() != logic::Sort::Bool) throw logic::LogicError("asserting a non-boolean term");
  if (asserted_set_.count(f)) return;
  declare_new(f);
  expect_success("(assert " + logic::to_smtlib(f) + ")");
  asserted_.push_back(f);
  asserted_set_.insert(f);
  ++stats_.asserts;
}

Assignment SolverSession::read_model()
{
  Assignment model;
  if (declared_.empty()) return model;
  std::string cmd = "(get-value (";
  for (std::size_t i = 0; i < declared_.size(); ++i) {
    if (i) cmd += ' ';
    cmd += logic::smt_symbol(declared_[i].name, declared_[i].step);
  }
  cmd += "))";
  send(cmd);
  SExpr r = read_response(std::nullopt);
  if (!r.is_list) throw ProtocolError("unexpected get-value answer '" + r.to_string() + "'");
  std::map<std::string, logic::Sort> sorts;
  for (const auto& d : declared_) sorts[logic::smt_symbol(d.name, d.step)] = d.sort;
  for (const auto& pair : r.items) {
    if (!pair.is_list || pair.items.size() != 2 || pair.items[0].is_list) {
      throw ModelParseError("malformed model entry '" + pair.to_string() + "'");
    }
    const std::string& sym = pair.items[0].atom;
    auto it = sorts.find(sym);
    auto dollar = sym.rfind('$');
    if (it == sorts.end() || dollar == std::string::npos) {
      throw ModelParseError("model mentions unknown symbol '" + sym + "'");
    }
    logic::IndexedVar var{sym.substr(0, dollar), static_cast<logic::Step>(std::stoul(sym.substr(dollar + 1)))};
    model[var] = parse_value(pair.items[1], it->second);
  }
  return model;
}

CheckResult SolverSession::entailed(const Term& f, std::span<const Term> assumptions)
{
  if (f.sort() != logic::Sort::Bool) throw logic::LogicError("entailment of a non-boolean term");
  if (!proc_.running()) throw ProtocolError("solver session is closed");
  declare_new(f);
  for (const auto& a : assumptions) declare_new(a);

  expect_success("(push 1)");
  for (const auto& a : assumptions) expect_success("(assert " + logic::to_smtlib(a) + ")");
  expect_success("(assert (not " + logic::to_smtlib(f) + "))");

  auto started = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (options_.check_timeout > 0ms) deadline = started + options_.check_timeout;
  send("(check-sat)");
  std::optional<SExpr> answer = read_response_until(deadline);
  stats_.check_time += Clock::now() - started;
  ++stats_.checks;

  CheckResult result;
  if (!answer) {
    ++stats_.timeouts;
    restart();
    result.reason = "timeout";
    return result;
  }
  if (answer->is_atom("unsat")) {
    result.kind = CheckResult::Kind::Entailed;
  } else if (answer->is_atom("sat")) {
    result.kind = CheckResult::Kind::NotEntailed;
    result.model = read_model();
  } else if (answer->is_atom("unknown")) {
    result.reason = "solver-unknown";
  } else {
    throw ProtocolError("unexpected check-sat answer '" + answer->to_string() + "'");
  }
  expect_success("(pop 1)");

  if (result.refuted() && options_.validate_models) {
    for (const auto& a : asserted_) {
      if (logic::evaluate_bool(a, result.model) == false) {
        throw ProtocolError("solver model falsifies asserted formula " + logic::to_string(a));
      }
    }
    for (const auto& a : assumptions) {
      if (logic::evaluate_bool(a, result.model) == false) {
        throw ProtocolError("solver model falsifies assumption " + logic::to_string(a));
      }
    }
    if (logic::evaluate_bool(f, result.model) == true) {
      throw ProtocolError("solver model satisfies the checked formula " + logic::to_string(f));
    }
  }
  return result;
}

void SolverSession::reset()
{
  expect_success("(reset-assertions)");
  asserted_.clear();
  asserted_set_.clear();
  ++stats_.resets;
}

void SolverSession::restart()
{
  ++stats_.restarts;
  proc_.kill();
  log("; solver restarted");
  start();
  auto declared = std::move(declared_);
  declared_.clear();
  declared_set_.clear();
  for (const auto& d : declared) {
    expect_success("(declare-fun " + logic::smt_symbol(d.name, d.step) + " () " + logic::to_smtlib(d.sort) + ")");
    declared_set_.insert({d.name, d.step});
    declared_.push_back(d);
  }
  for (const auto& a : asserted_) expect_success("(assert " + logic::to_smtlib(a) + ")");
}

void SolverSession::close() { proc_.kill(); }

}  // namespace pk::smt
