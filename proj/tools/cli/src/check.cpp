#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pk/cli/cli.hpp"
#include "pk/encoder/encoder.hpp"
#include "pk/frontend/frontend.hpp"
#include "pk/logic/printer.hpp"

namespace pk::cli {

namespace {

void print_verdict(const encoder::TransitionSystem& ts, const engine::Verdict& v, std::ostream& out)
{
  out << engine::headline(v) << '\n';
  if (v.kind == engine::Verdict::Kind::Invalid) {
    for (const auto& line : engine::format_trace(ts, v.trace)) out << line << '\n';
  }
}

void dump_invariants(const std::string& path, const std::string& file, const engine::RunResult& r)
{
  std::ofstream f(path, std::ios::app);
  for (const auto& m : r.emissions) {
    f << "# " << file << " proved_at_k=" << m.proved_at_k << " count=" << m.formulas.size() << '\n';
    for (std::size_t i = 0; i < m.formulas.size(); ++i) {
      f << m.proved_at_k << '\t' << m.ids[i] << '\t' << logic::to_string(m.formulas[i]) << '\n';
    }
  }
}

}  // namespace

int exit_code(const engine::Verdict& v)
{
  if (v.solver_failure) return kExitSolver;
  switch (v.kind) {
    case engine::Verdict::Kind::Valid: return kExitValid;
    case engine::Verdict::Kind::Invalid: return kExitInvalid;
    case engine::Verdict::Kind::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

BenchRecord make_record(const std::string& file, engine::Mode mode, const engine::RunResult& r)
{
  BenchRecord rec;
  rec.file = file;
  rec.mode = std::string(engine::to_string(mode));
  rec.verdict = std::string(engine::to_string(r.verdict.kind));
  rec.k = r.verdict.kind == engine::Verdict::Kind::Unknown ? -1 : static_cast<long>(r.verdict.k);
  rec.time_s = r.stats.wall.count();
  rec.inv_emitted = r.stats.inv_emitted;
  rec.inv_used = r.stats.inv_used;
  rec.checks_base = r.stats.checks_base;
  rec.checks_step = r.stats.checks_step;
  return rec;
}

CheckOutcome check_file(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err)
{
  CheckOutcome outcome;
  outcome.record.file = path;
  outcome.record.mode = std::string(engine::to_string(config.engine.mode));
  outcome.record.verdict = "unknown";

  encoder::TransitionSystem ts;
  try {
    auto program = frontend::elaborate(frontend::read_file(path), config.main);
    ts = encoder::encode(program);
  } catch (const frontend::FrontendError& e) {
    err << path << ":" << e.what() << '\n';
    outcome.exit_code = kExitFrontend;
    return outcome;
  } catch (const std::exception& e) {
    err << path << ": " << e.what() << '\n';
    outcome.exit_code = kExitFrontend;
    return outcome;
  }

  if (config.dump_ts) out << encoder::dump_smtlib(ts);

  engine::RunResult r = engine::orchestrate(ts, config.engine);
  outcome.exit_code = exit_code(r.verdict);
  outcome.record = make_record(path, config.engine.mode, r);

  if (r.verdict.solver_failure) err << path << ": solver error: " << r.verdict.diagnostic << '\n';
  if (config.format == Format::Tsv) {
    out << to_tsv(outcome.record) << '\n';
  } else {
    print_verdict(ts, r.verdict, out);
    if (r.verdict.kind == engine::Verdict::Kind::Unknown && !r.verdict.diagnostic.empty()) {
      err << path << ": " << r.verdict.diagnostic << '\n';
    }
    if (config.per_property && r.verdict.kind == engine::Verdict::Kind::Invalid && ts.properties.size() > 1) {
      for (std::size_t i = 0; i < ts.properties.size(); ++i) {
        auto single = ts.with_property(ts.properties[i], ts.property_names[i]);
        auto ri = engine::orchestrate(single, config.engine);
        out << "property " << ts.property_names[i] << ": " << engine::headline(ri.verdict) << '\n';
      }
    }
  }

  if (!config.dump_invariants.empty()) dump_invariants(config.dump_invariants, path, r);
  if (!config.stats_path.empty()) {
    bool fresh = true;
    {
      std::ifstream probe(config.stats_path);
      fresh = !probe || probe.peek() == std::ifstream::traits_type::eof();
    }
    std::ofstream f(config.stats_path, std::ios::app);
    if (fresh) f << tsv_header() << '\n';
    f << to_tsv(outcome.record) << '\n';
  }
  outcome.result = std::move(r);
  return outcome;
}

}  // namespace pk::cli
