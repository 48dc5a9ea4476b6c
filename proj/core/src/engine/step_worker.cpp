#include <set>
#include <variant>

#include "pk/engine/path_compression.hpp"
#include "pk/engine/workers.hpp"

namespace pk::engine {

using namespace std::chrono_literals;

namespace {

class StepWorker {
 public:
  StepWorker(const encoder::TransitionSystem& ts, const Term& prop, Channel<BaseToStep>& inbox,
             Channel<InvGenToStep>& invariants, Channel<StepToBase>& to_base, const EngineOptions& opts,
             bool expect_invariants, std::stop_token stop)
      : ts_(ts),
        prop_(prop),
        inbox_(inbox),
        invariants_(invariants),
        to_base_(to_base),
        opts_(opts),
        invgen_done_(!expect_invariants),
        stop_(std::move(stop))
  {
  }

  StepReport run()
  {
    Step k = 0;
    try {
      smt::SessionOptions so = opts_.solver;
      so.name = "step";
      session_.emplace(smt::SolverSession::open(so, stop_));

      while (true) {
        if (terminated()) return report_;
        bool fresh = receive_invariants();
        if (k > opts_.max_k) {
          // New invariants may still close the proof at the deepest level.
          if (fresh) {
            k = opts_.max_k;
          } else {
            if (invgen_done_) {
              to_base_.send(StepGaveUp{opts_.max_k, "max-k", {}});
              idle();
              return report_;
            }
            if (!interruptible_sleep(stop_, 1ms)) return report_;
            continue;
          }
        }
        extend_to(k);
        if (opts_.step_delay > 0ms && !interruptible_sleep(stop_, opts_.step_delay)) return report_;
        report_.last_k = k;
        auto r = session_->entailed(logic::instantiate_state(prop_, k + 1));
        ++report_.checks;
        if (r.entailed()) {
          report_.proved = true;
          to_base_.send(StepProved{k, seen_.size()});
          idle();
          return report_;
        }
        if (r.refuted() && receive_invariants()) continue;
        ++k;
      }
    } catch (const smt::Stopped&) {
      return report_;
    } catch (const std::exception& e) {
      to_base_.send(StepGaveUp{k, "solver-unknown", std::string("inductive step: ") + e.what()});
      idle();
      return report_;
    }
  }

 private:
  bool terminated()
  {
    if (stop_.stop_requested()) return true;
    if (inbox_.try_receive()) {
      got_m2_ = true;
    }
    return got_m2_;
  }

  void idle()
  {
    while (!terminated()) {
      if (!interruptible_sleep(stop_, 1ms)) return;
    }
  }

  // Asserts T@i and P@i for i ≤ k, invariants up to k+1 and the compression
  // constraints for depth k.
  void extend_to(Step k)
  {
    while (!depth_ || *depth_ < k) {
      Step i = depth_ ? *depth_ + 1 : 0;
      session_->assert_formula(logic::instantiate_trans(ts_.trans, i));
      session_->assert_formula(logic::instantiate_state(prop_, i));
      if (opts_.path_compression) {
        for (const auto& c : compression_at(ts_, i + 1)) session_->assert_formula(c);
      }
      for (const auto& inv : invariants_list_) {
        if (i == 0) session_->assert_formula(logic::instantiate_state(inv, 0));
        session_->assert_formula(logic::instantiate_state(inv, i + 1));
      }
      depth_ = i;
    }
  }

  // Returns true if at least one previously unseen invariant arrived.
  bool receive_invariants()
  {
    bool fresh = false;
    while (auto m = invariants_.try_receive()) {
      if (auto* inv = std::get_if<Invariants>(&*m)) {
        for (const auto& f : inv->formulas) {
          if (!seen_.insert(f).second) continue;
          fresh = true;
          ++report_.invariants_received;
          invariants_list_.push_back(f);
          if (depth_) {
            for (Step i = 0; i <= *depth_ + 1; ++i) session_->assert_formula(logic::instantiate_state(f, i));
          }
        }
      } else {
        invgen_done_ = true;
      }
    }
    return fresh;
  }

  const encoder::TransitionSystem& ts_;
  Term prop_;
  Channel<BaseToStep>& inbox_;
  Channel<InvGenToStep>& invariants_;
  Channel<StepToBase>& to_base_;
  const EngineOptions& opts_;
  bool invgen_done_;
  std::stop_token stop_;
  bool got_m2_ = false;
  std::optional<smt::SolverSession> session_;
  std::optional<Step> depth_;
  std::set<Term, logic::TermLess> seen_;
  std::vector<Term> invariants_list_;
  StepReport report_;
};

}  // namespace

StepReport run_step(const encoder::TransitionSystem& ts, const Term& prop, Channel<BaseToStep>& inbox,
                    Channel<InvGenToStep>& invariants, Channel<StepToBase>& to_base, const EngineOptions& opts,
                    bool expect_invariants, std::stop_token stop)
{
  return StepWorker(ts, prop, inbox, invariants, to_base, opts, expect_invariants, std::move(stop)).run();
}

}  // namespace pk::engine
