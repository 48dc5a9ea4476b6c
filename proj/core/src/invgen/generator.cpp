#include "pk/invgen/generator.hpp"

#include <optional>
#include <set>

namespace pk::invgen {

namespace {

enum class Outcome { Entailed, Stopped, Stuck, Unknown };

struct Halt {
  std::string reason;
  std::string diagnostic;
};

class Generator {
 public:
  Generator(const encoder::TransitionSystem& ts, engine::Channel<engine::InvGenToStep>& out,
            engine::Channel<engine::BaseToInvGen>& in, const GeneratorOptions& opts, std::stop_token stop)
      : ts_(ts), out_(out), in_(in), opts_(opts), stop_(std::move(stop))
  {
  }

  GeneratorReport run(CandidateSet c)
  {
    try {
      smt::SessionOptions so = opts_.solver;
      so.name = "invgen-base";
      base_.emplace(smt::SolverSession::open(so, stop_));
      so.name = "invgen-ind";
      ind_.emplace(smt::SolverSession::open(so, stop_));
      if (opts_.version == Version::A) {
        version_a(std::move(c));
      } else {
        version_b(std::move(c));
      }
    } catch (const Halt& h) {
      report_.end_reason = h.reason;
      report_.diagnostic = h.diagnostic;
    } catch (const smt::Stopped&) {
      report_.end_reason = "stopped";
    } catch (const std::exception& e) {
      report_.end_reason = "error";
      report_.diagnostic = e.what();
    }
    out_.send(engine::InvGenFinished{report_.end_reason});
    return report_;
  }

 private:
  bool should_stop()
  {
    if (in_.try_receive()) got_m4_ = true;
    return got_m4_ || stop_.stop_requested();
  }

  void check_outcome(Outcome o)
  {
    switch (o) {
      case Outcome::Entailed: return;
      case Outcome::Stopped: throw Halt{"stopped", {}};
      case Outcome::Stuck: throw Halt{"stuck", "counterexamples stopped removing candidates"};
      case Outcome::Unknown: throw Halt{"solver-unknown", unknown_reason_};
    }
  }

  // Weakens `set` with counterexamples to entailed(set@at) until the check
  // succeeds. `hyps` gives the scoped hypotheses for the current set.
  template <class Hyps>
  Outcome weaken(smt::SolverSession& s, CandidateSet& set, Step at, Hyps&& hyps, bool& changed)
  {
    std::size_t bound = set.alive_count() + opts_.extra_rounds;
    for (std::size_t round = 0; round <= bound; ++round) {
      if (should_stop()) return Outcome::Stopped;
      if (set.alive_count() == 0) return Outcome::Entailed;
      Term target = set.at(at);
      std::vector<Term> assumptions = hyps(set);
      auto r = s.entailed(target, assumptions);
      ++report_.checks;
      if (r.entailed()) return Outcome::Entailed;
      if (!r.refuted()) {
        unknown_reason_ = r.reason;
        return Outcome::Unknown;
      }
      std::size_t before = set.alive_count();
      set = filter(std::move(set), project(r.model, target), at);
      if (set.alive_count() == before) return Outcome::Stuck;
      changed = true;
    }
    return Outcome::Stuck;
  }

  void assert_base_step(Step k)
  {
    if (k == 0) {
      base_->assert_formula(logic::instantiate_state(ts_.init, 0));
    } else {
      base_->assert_formula(logic::instantiate_trans(ts_.trans, k - 1));
    }
  }

  static std::vector<Term> hypotheses(const CandidateSet& set, Step k)
  {
    std::vector<Term> out;
    Term conj = set.conjunction();
    if (conj.is_true()) return out;
    for (Step i = 0; i <= k; ++i) out.push_back(logic::instantiate_state(conj, i));
    return out;
  }

  void emit(const CandidateSet& set, Step k, const std::set<std::size_t>* skip)
  {
    engine::Invariants m;
    m.proved_at_k = k;
    for (const auto& c : set.items()) {
      if (!c.alive || (skip && skip->count(c.id))) continue;
      m.formulas.push_back(c.formula);
      m.ids.push_back(c.id);
    }
    report_.emissions.push_back(m);
    out_.send(std::move(m));
  }

  void version_a(CandidateSet c)
  {
    Step k = 0;
    bool changed = true;
    for (;; ++k) {
      if (k > opts_.max_k) throw Halt{"max-k", {}};
      report_.final_k = k;
      assert_base_step(k);
      changed = false;
      check_outcome(weaken(*base_, c, k, [](const CandidateSet&) { return std::vector<Term>{}; }, changed));
      if (!changed) break;
    }
    for (Step i = 0; i <= k; ++i) ind_->assert_formula(logic::instantiate_trans(ts_.trans, i));
    bool weakened = false;
    check_outcome(weaken(*ind_, c, k + 1, [k](const CandidateSet& s) { return hypotheses(s, k); }, weakened));
    emit(c, k, nullptr);
    report_.end_reason = "converged";
  }

  void version_b(CandidateSet c)
  {
    std::set<std::size_t> emitted;
    for (Step k = 0;; ++k) {
      if (k > opts_.max_k) throw Halt{"max-k", {}};
      report_.final_k = k;
      assert_base_step(k);
      bool ignored = false;
      check_outcome(weaken(*base_, c, k, [](const CandidateSet&) { return std::vector<Term>{}; }, ignored));

      CandidateSet d = c;
      ind_->reset();
      for (Step i = 0; i <= k; ++i) ind_->assert_formula(logic::instantiate_trans(ts_.trans, i));
      bool changed = false;
      check_outcome(weaken(*ind_, d, k + 1, [k](const CandidateSet& s) { return hypotheses(s, k); }, changed));

      if (should_stop()) throw Halt{"stopped", {}};
      bool has_new = false;
      for (const auto& cand : d.items()) {
        if (cand.alive && !emitted.count(cand.id)) has_new = true;
      }
      if (opts_.delta ? has_new : d.alive_count() > 0) emit(d, k, opts_.delta ? &emitted : nullptr);
      for (const auto& cand : d.items()) {
        if (cand.alive) emitted.insert(cand.id);
      }
      if (!changed) {
        report_.end_reason = "converged";
        return;
      }
    }
  }

  const encoder::TransitionSystem& ts_;
  engine::Channel<engine::InvGenToStep>& out_;
  engine::Channel<engine::BaseToInvGen>& in_;
  const GeneratorOptions& opts_;
  std::stop_token stop_;
  std::optional<smt::SolverSession> base_;
  std::optional<smt::SolverSession> ind_;
  bool got_m4_ = false;
  std::string unknown_reason_;
  GeneratorReport report_;
};

}  // namespace

GeneratorReport run_generator(const encoder::TransitionSystem& ts, CandidateSet candidates,
                              engine::Channel<engine::InvGenToStep>& out, engine::Channel<engine::BaseToInvGen>& in,
                              const GeneratorOptions& opts, std::stop_token stop)
{
  return Generator(ts, out, in, opts, std::move(stop)).run(std::move(candidates));
}

}  // namespace pk::invgen
