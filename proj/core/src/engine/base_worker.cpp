#include <variant>

#include "pk/engine/workers.hpp"

namespace pk::engine {

using namespace std::chrono_literals;

BaseReport run_base(const encoder::TransitionSystem& ts, const Term& prop, Channel<StepToBase>& inbox,
                    Channel<BaseToStep>& to_step, Channel<BaseToInvGen>& to_invgen, const EngineOptions& opts,
                    std::stop_token stop)
{
  BaseReport report;
  auto finish = [&](Verdict v) {
    to_step.send(BaseTerminated{});
    to_invgen.send(StopInvGen{});
    report.verdict = std::move(v);
    return report;
  };

  std::optional<StepProved> proved;
  std::optional<StepGaveUp> gave_up;
  auto drain = [&] {
    while (auto m = inbox.try_receive()) {
      if (auto* p = std::get_if<StepProved>(&*m)) {
        if (!proved) proved = *p;
      } else {
        gave_up = std::get<StepGaveUp>(*m);
      }
    }
  };

  try {
    smt::SessionOptions so = opts.solver;
    so.name = "base";
    auto session = smt::SolverSession::open(so, stop);
    session.assert_formula(logic::instantiate_state(ts.init, 0));

    Step k = 0;
    while (true) {
      drain();
      if (proved && k > proved->k) return finish(Verdict::valid(proved->k, proved->invariants_used));
      if (k > opts.max_k) {
        if (gave_up) return finish(Verdict::unknown(gave_up->reason, gave_up->diagnostic));
        if (!interruptible_sleep(stop, 1ms)) throw smt::Stopped();
        continue;
      }
      if (k >= 1) session.assert_formula(logic::instantiate_trans(ts.trans, k - 1));
      auto r = session.entailed(logic::instantiate_state(prop, k));
      ++report.checks;
      if (r.refuted()) return finish(Verdict::invalid(k, extract_trace(r.model, ts, k)));
      if (!r.entailed()) return finish(Verdict::unknown(r.reason, "base check at k=" + std::to_string(k)));
      report.checked_through = k;
      ++k;
    }
  } catch (const smt::Stopped&) {
    return finish(Verdict::unknown("timeout"));
  } catch (const smt::SpawnError& e) {
    auto v = Verdict::unknown("solver-unknown", e.what());
    v.solver_failure = true;
    return finish(std::move(v));
  } catch (const smt::HandshakeError& e) {
    auto v = Verdict::unknown("solver-unknown", e.what());
    v.solver_failure = true;
    return finish(std::move(v));
  } catch (const smt::ProtocolError& e) {
    return finish(Verdict::unknown("solver-unknown", e.what()));
  } catch (const smt::ModelParseError& e) {
    return finish(Verdict::unknown("solver-unknown", e.what()));
  } catch (const std::exception& e) {
    return finish(Verdict::unknown("internal-error", e.what()));
  }
}

}  // namespace pk::engine
