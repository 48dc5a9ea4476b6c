#include "pk/engine/orchestrator.hpp"

#include <future>
#include <thread>

#include "pk/encoder/term_pool.hpp"
#include "pk/engine/workers.hpp"
#include "pk/invgen/generator.hpp"

namespace pk::engine {

std::string_view to_string(Mode mode)
{
  switch (mode) {
    case Mode::KInduct: return "k-induct";
    case Mode::NoIncInv: return "no-inc-inv";
    case Mode::IncInv: return "inc-inv";
  }
  return "inc-inv";
}

std::optional<Mode> parse_mode(std::string_view text)
{
  if (text == "k-induct") return Mode::KInduct;
  if (text == "no-inc-inv") return Mode::NoIncInv;
  if (text == "inc-inv") return Mode::IncInv;
  return std::nullopt;
}

RunResult orchestrate(const encoder::TransitionSystem& ts, const EngineOptions& opts)
{
  auto started = std::chrono::steady_clock::now();
  const Term prop = ts.property();
  const bool with_invgen = opts.mode != Mode::KInduct;

  Channel<StepToBase> step_to_base;
  Channel<BaseToStep> base_to_step;
  Channel<InvGenToStep> invgen_to_step;
  Channel<BaseToInvGen> base_to_invgen;

  BaseReport base_report;
  StepReport step_report;
  invgen::GeneratorReport invgen_report;
  std::promise<void> base_done;
  auto base_future = base_done.get_future();

  {
    std::jthread step_thread([&](std::stop_token st) {
      step_report = run_step(ts, prop, base_to_step, invgen_to_step, step_to_base, opts, with_invgen, st);
    });

    std::jthread invgen_thread;
    if (with_invgen) {
      invgen_thread = std::jthread([&](std::stop_token st) {
        try {
          auto pool = encoder::harvest_terms(ts, opts.caps);
          auto candidates = invgen::generate_candidates(pool, invgen::templates(opts.templates));
          invgen::GeneratorOptions go;
          go.version = opts.mode == Mode::IncInv ? invgen::Version::B : invgen::Version::A;
          go.delta = opts.inv_delta;
          go.max_k = opts.max_k;
          go.solver = opts.solver;
          invgen_report = invgen::run_generator(ts, std::move(candidates), invgen_to_step, base_to_invgen, go, st);
        } catch (const std::exception& e) {
          invgen_report.end_reason = "error";
          invgen_report.diagnostic = e.what();
          invgen_to_step.send(InvGenFinished{"error"});
        }
      });
    }

    std::jthread base_thread([&](std::stop_token st) {
      try {
        base_report = run_base(ts, prop, step_to_base, base_to_step, base_to_invgen, opts, st);
      } catch (const std::exception& e) {
        base_report.verdict = Verdict::unknown("internal-error", e.what());
      }
      base_done.set_value();
    });

    auto deadline = started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(opts.timeout);
    if (base_future.wait_until(deadline) == std::future_status::timeout) base_thread.request_stop();
    base_future.wait();

    step_thread.request_stop();
    if (invgen_thread.joinable()) invgen_thread.request_stop();
  }

  RunResult result;
  result.verdict = std::move(base_report.verdict);
  result.stats.checks_base = base_report.checks;
  result.stats.checks_step = step_report.checks;
  result.stats.checks_invgen = invgen_report.checks;
  result.stats.step_k = step_report.last_k;
  result.stats.invgen_end = invgen_report.end_reason;
  result.emissions = std::move(invgen_report.emissions);
  for (const auto& m : result.emissions) result.stats.inv_emitted += m.formulas.size();
  result.stats.inv_used = result.verdict.invariants_used;
  result.stats.wall = std::chrono::steady_clock::now() - started;
  return result;
}

}  // namespace pk::engine
