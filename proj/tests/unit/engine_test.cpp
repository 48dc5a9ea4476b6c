#include <thread>

#include <gtest/gtest.h>

#include "pk/encoder/encoder.hpp"
#include "pk/engine/orchestrator.hpp"
#include "pk/frontend/frontend.hpp"
#include "pk/engine/path_compression.hpp"
#include "pk/engine/workers.hpp"
#include "pk/logic/evaluate.hpp"
#include "pk/logic/printer.hpp"
#include "pk/smt/session.hpp"
#include "support/corpus.hpp"

namespace pk::engine {
namespace {

using encoder::StateVar;
using encoder::TransitionSystem;
using encoder::VarRole;
using logic::Sort;
using logic::Value;

Term x() { return logic::var("x", Sort::Int); }
Term xn() { return logic::next_var("x", Sort::Int); }
Term n(long v) { return logic::int_const(v); }

TransitionSystem sys_inc(Term prop)
{
  return TransitionSystem::make({{"x", Sort::Int, VarRole::Local}}, logic::eq(x(), n(0)),
                                logic::eq(xn(), logic::add(x(), n(1))), {prop});
}

Term ctr3_next(const Term& v) { return logic::ite(logic::eq(v, n(3)), n(0), logic::add(v, n(1))); }

TransitionSystem sys_ctr3(Term prop)
{
  return TransitionSystem::make({{"x", Sort::Int, VarRole::Local}}, logic::eq(x(), n(0)),
                                logic::eq(xn(), ctr3_next(x())), {prop});
}

EngineOptions kinduct(Step max_k = 20)
{
  EngineOptions o;
  o.mode = Mode::KInduct;
  o.max_k = max_k;
  o.timeout = std::chrono::duration<double>(30);
  return o;
}

TEST(Orchestrate, SysIncCounterexample)
{
  // Oracle: unroll x = 0, 1, 2, ... until x < 2 fails.
  std::vector<long> expected;
  for (long v = 0;; ++v) {
    expected.push_back(v);
    if (!(v < 2)) break;
  }
  auto ts = sys_inc(logic::lt(x(), n(2)));
  auto r = orchestrate(ts, kinduct());
  ASSERT_EQ(r.verdict.kind, Verdict::Kind::Invalid);
  EXPECT_EQ(r.verdict.k + 1, expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(r.verdict.trace.values.at({"x", static_cast<Step>(i)}), Value::integer(expected[i]));
  }
  EXPECT_EQ(validate_trace(ts, r.verdict.trace, ts.property()), std::nullopt);
  EXPECT_EQ(headline(r.verdict), "INVALID k=2");
}

TEST(Orchestrate, TautologyIsZeroInductive)
{
  auto r = orchestrate(sys_inc(logic::bool_const(true)), kinduct());
  EXPECT_EQ(r.verdict.kind, Verdict::Kind::Valid);
  EXPECT_EQ(r.verdict.k, 0u);
}

TEST(Orchestrate, Ctr3BoundIsZeroInductive)
{
  // Oracle: reachable states are {0, 1, 2, 3}; x <= 3 maps into 0..3.
  std::set<long> reach{0};
  for (long v = 0; reach.size() < 10;) {
    long next = v == 3 ? 0 : v + 1;
    if (!reach.insert(next).second) break;
    v = next;
  }
  EXPECT_EQ(reach, (std::set<long>{0, 1, 2, 3}));
  auto r = orchestrate(sys_ctr3(logic::le(x(), n(3))), kinduct());
  ASSERT_EQ(r.verdict.kind, Verdict::Kind::Valid);
  EXPECT_EQ(r.verdict.k, 0u);
  EXPECT_EQ(headline(r.verdict), "VALID k=0 invariants=0");
}

// Smallest k with no chain x0..xk (all <> 5) stepping into 5. The chain is
// determined by x0 and must start within 6 of 5, so a small window is
// exhaustive.
std::optional<long> ctr3_ne5_depth()
{
  for (long k = 0; k <= 10; ++k) {
    bool chain = false;
    for (long x0 = -20; x0 <= 20 && !chain; ++x0) {
      long v = x0;
      bool ok = true;
      for (long i = 0; i <= k && ok; ++i) {
        ok = v != 5;
        v = v == 3 ? 0 : v + 1;
      }
      chain = ok && v == 5;
    }
    if (!chain) return k;
  }
  return std::nullopt;
}

TEST(Orchestrate, Ctr3NotFiveIsOneInductive)
{
  auto depth = ctr3_ne5_depth();
  ASSERT_EQ(depth, 1);
  auto r = orchestrate(sys_ctr3(logic::lnot(logic::eq(x(), n(5)))), kinduct(10));
  ASSERT_EQ(r.verdict.kind, Verdict::Kind::Valid);
  EXPECT_EQ(static_cast<long>(r.verdict.k), *depth);
}

TEST(Orchestrate, NonInductiveHitsMaxK)
{
  // x <> -1 for an unbounded counter: every k has a spurious chain.
  auto r = orchestrate(sys_inc(logic::lnot(logic::eq(x(), n(-1)))), kinduct(10));
  EXPECT_EQ(r.verdict.kind, Verdict::Kind::Unknown);
  EXPECT_EQ(r.verdict.reason, "max-k");
  EXPECT_EQ(headline(r.verdict), "UNKNOWN reason=max-k");
}

TEST(Orchestrate, InvariantsCloseNonInductiveProperty)
{
  for (Mode m : {Mode::NoIncInv, Mode::IncInv}) {
    auto o = kinduct(50);
    o.mode = m;
    auto r = orchestrate(sys_inc(logic::lnot(logic::eq(x(), n(-1)))), o);
    ASSERT_EQ(r.verdict.kind, Verdict::Kind::Valid) << to_string(m);
    EXPECT_GE(r.verdict.invariants_used, 1u);
    EXPECT_FALSE(r.emissions.empty());
  }
}

TEST(Orchestrate, GlobalTimeout)
{
  auto o = kinduct(100000);
  o.timeout = std::chrono::duration<double>(0.5);
  auto started = std::chrono::steady_clock::now();
  auto r = orchestrate(sys_inc(logic::lnot(logic::eq(x(), n(-1)))), o);
  EXPECT_EQ(r.verdict.kind, Verdict::Kind::Unknown);
  EXPECT_EQ(r.verdict.reason, "timeout");
  EXPECT_LT(std::chrono::steady_clock::now() - started, std::chrono::seconds(3));
}

TEST(Orchestrate, SolverFailureIsReported)
{
  auto o = kinduct();
  o.solver.command = testing::fixture_path("no_push_solver.sh");
  auto r = orchestrate(sys_inc(logic::lt(x(), n(2))), o);
  EXPECT_EQ(r.verdict.kind, Verdict::Kind::Unknown);
  EXPECT_TRUE(r.verdict.solver_failure);
  EXPECT_EQ(r.verdict.reason, "solver-unknown");
}

TEST(Orchestrate, UnknownAnswersNeverBecomeVerdicts)
{
  auto o = kinduct();
  o.solver.command = testing::fixture_path("unknown_solver.sh");
  auto r = orchestrate(sys_inc(logic::lt(x(), n(2))), o);
  EXPECT_EQ(r.verdict.kind, Verdict::Kind::Unknown);
  EXPECT_EQ(r.verdict.reason, "solver-unknown");
}

TEST(Orchestrate, NoOrphanSolvers)
{
  std::size_t before = smt::Subprocess::live_count();
  for (Mode m : {Mode::KInduct, Mode::NoIncInv, Mode::IncInv}) {
    auto o = kinduct();
    o.mode = m;
    orchestrate(sys_inc(logic::lt(x(), n(2))), o);
    orchestrate(sys_ctr3(logic::le(x(), n(3))), o);
    EXPECT_EQ(smt::Subprocess::live_count(), before) << to_string(m);
  }
}

TEST(Orchestrate, BaseChecksEveryDepthUpToTheProof)
{
  for (const auto& e : testing::corpus()) {
    if (!e.valid) continue;
    auto ts = encoder::encode(frontend::elaborate(frontend::read_file(testing::corpus_path(e))));
    for (Mode m : {Mode::KInduct, Mode::IncInv}) {
      auto o = kinduct(40);
      o.mode = m;
      auto r = orchestrate(ts, o);
      if (r.verdict.kind != Verdict::Kind::Valid) continue;
      EXPECT_GE(r.stats.checks_base, r.verdict.k + 1) << e.file << " " << to_string(m);
    }
  }
}

TEST(StepWorker, InvariantClosesProofAtCurrentDepth)
{
  // x0 <= 3 and T entail x1 <= 3 and x1 <> 5.
  auto ts = sys_ctr3(logic::lnot(logic::eq(x(), n(5))));
  Channel<BaseToStep> inbox;
  Channel<InvGenToStep> invariants;
  Channel<StepToBase> to_base;
  invariants.send(Invariants{{logic::le(x(), n(3))}, {0}, 0});
  auto opts = kinduct();
  std::stop_source stop;
  StepReport report;
  std::jthread t([&] { report = run_step(ts, ts.property(), inbox, invariants, to_base, opts, true, stop.get_token()); });
  std::optional<StepToBase> msg;
  for (int i = 0; i < 500 && !msg; ++i) {
    msg = to_base.try_receive();
    if (!msg) std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  inbox.send(BaseTerminated{});
  t.join();
  ASSERT_TRUE(msg);
  auto* proved = std::get_if<StepProved>(&*msg);
  ASSERT_NE(proved, nullptr);
  EXPECT_EQ(proved->k, 0u);
  EXPECT_EQ(proved->invariants_used, 1u);
}

TEST(PathCompression, SingleVariableDepthZero)
{
  auto ts = sys_inc(logic::lt(x(), n(2)));
  auto c = path_compression_constraints(ts, 0);
  Term x0 = logic::indexed_var("x", Sort::Int, 0);
  Term x1 = logic::indexed_var("x", Sort::Int, 1);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], logic::lnot(logic::eq(x0, x1)));
  EXPECT_EQ(c[1], logic::lnot(logic::eq(x1, n(0))));
}

TEST(PathCompression, ZeroVariablesIsInconsistent)
{
  auto ts = TransitionSystem::make({}, logic::bool_const(true), logic::bool_const(true), {logic::bool_const(false)});
  auto s = smt::SolverSession::open({});
  for (const auto& f : path_compression_constraints(ts, 0)) s.assert_formula(f);
  EXPECT_TRUE(s.entailed(logic::bool_const(false)).entailed());
}

TEST(PathCompression, OneBitSystemExhaustsStates)
{
  // One free bit: only 2 distinct states exist.
  Term b = logic::var("b", Sort::Bool);
  Term prop = logic::lor(b, logic::lnot(b));
  auto ts = TransitionSystem::make({{"b", Sort::Bool, VarRole::Input}}, logic::bool_const(true),
                                   logic::bool_const(true), {logic::implies(b, b)});
  auto s = smt::SolverSession::open({});
  for (Step i = 0; i <= 1; ++i) {
    s.assert_formula(logic::instantiate_trans(ts.trans, i));
    s.assert_formula(logic::instantiate_state(prop, i));
  }
  for (const auto& f : path_compression_constraints(ts, 1)) s.assert_formula(f);
  // Three pairwise distinct states over one bit are impossible.
  EXPECT_TRUE(s.entailed(logic::bool_const(false)).entailed());
}

TEST(Trace, ExtractAndValidate)
{
  auto ts = TransitionSystem::make({{"x", Sort::Int, VarRole::Local}, {"ok", Sort::Bool, VarRole::Output}},
                                   logic::land(logic::eq(x(), n(0)), logic::eq(logic::var("ok", Sort::Bool),
                                                                               logic::lt(x(), n(2)))),
                                   logic::land(logic::eq(xn(), logic::add(x(), n(1))),
                                               logic::eq(logic::next_var("ok", Sort::Bool), logic::lt(xn(), n(2)))),
                                   {logic::var("ok", Sort::Bool)});
  logic::Assignment model;
  for (Step i = 0; i <= 2; ++i) {
    model[{"x", i}] = Value::integer(i);
    if (i != 1) model[{"ok", i}] = Value::boolean(i < 2);
  }
  auto trace = extract_trace(model, ts, 2);
  EXPECT_EQ(trace.length, 3u);
  EXPECT_EQ(trace.values.at({"ok", 1}), Value::boolean(true));
  EXPECT_EQ(validate_trace(ts, trace, ts.property()), std::nullopt);
  EXPECT_EQ(format_trace(ts, trace).back(), "step 2: x=2 ok=false");

  auto total = model;
  total[{"ok", 1}] = Value::boolean(true);
  EXPECT_EQ(extract_trace(total, ts, 2).values, total);

  auto wrong_end = trace;
  wrong_end.values[{"x", 2}] = Value::integer(1);
  wrong_end.values[{"ok", 2}] = Value::boolean(true);
  auto v = validate_trace(ts, wrong_end, ts.property());
  ASSERT_TRUE(v);
  EXPECT_EQ(v->step, 2u);

  auto wrong_start = trace;
  wrong_start.values[{"x", 0}] = Value::integer(7);
  v = validate_trace(ts, wrong_start, ts.property());
  ASSERT_TRUE(v);
  EXPECT_EQ(v->step, 0u);
}

TEST(Trace, LastStepStillSatisfyingPropertyIsRejected)
{
  auto ts = sys_inc(logic::lt(x(), n(2)));
  Trace t;
  t.length = 2;
  t.values = {{{"x", 0}, Value::integer(0)}, {{"x", 1}, Value::integer(1)}};
  auto v = validate_trace(ts, t, ts.property());
  ASSERT_TRUE(v);
  EXPECT_EQ(v->step, 1u);
}

TEST(Trace, IncompletableModel)
{
  // y is free in T but pinned to 5 in I; the default 0 breaks I.
  Term y = logic::var("y", Sort::Int);
  auto ts = TransitionSystem::make({{"y", Sort::Int, VarRole::Local}},
                                   logic::lor(logic::eq(y, n(5)), logic::eq(y, n(6))), logic::bool_const(true),
                                   {logic::bool_const(false)});
  EXPECT_THROW(extract_trace({}, ts, 0), IncompletableModel);
}

TEST(Modes, ParseAndPrint)
{
  for (Mode m : {Mode::KInduct, Mode::NoIncInv, Mode::IncInv}) EXPECT_EQ(parse_mode(to_string(m)), m);
  EXPECT_EQ(parse_mode("kind"), std::nullopt);
}

}  // namespace
}  // namespace pk::engine
