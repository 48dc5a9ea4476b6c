#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "pk/encoder/encoder.hpp"
#include "pk/frontend/frontend.hpp"
#include "pk/invgen/candidates.hpp"
#include "pk/invgen/generator.hpp"
#include "pk/logic/printer.hpp"
#include "pk/smt/session.hpp"
#include "support/corpus.hpp"

namespace pk::invgen {

namespace {

using encoder::TransitionSystem;
using encoder::VarRole;
using logic::Sort;
using logic::Value;

Term x() { return logic::var("x", Sort::Int); }
Term n(long v) { return logic::int_const(v); }

TransitionSystem sys_inc()
{
  return TransitionSystem::make({{"x", Sort::Int, VarRole::Local}}, logic::eq(x(), n(0)),
                                logic::eq(logic::next_var("x", Sort::Int), logic::add(x(), n(1))),
                                {logic::lnot(logic::eq(x(), n(-1)))});
}

bool contains(const std::vector<Term>& v, const Term& t)
{
  return std::find(v.begin(), v.end(), t) != v.end();
}

std::vector<Term> alive_formulas(const CandidateSet& c)
{
  std::vector<Term> out;
  for (const auto& a : c.alive()) out.push_back(a.formula);
  return out;
}

TEST(Candidates, OrderedPairsPerTemplate)
{
  encoder::TermPool pool{{x(), n(0)}, {logic::var("b", Sort::Bool)}};
  auto c = generate_candidates(pool, templates({}));
  EXPECT_EQ(alive_formulas(c), (std::vector<Term>{logic::le(x(), n(0)), logic::le(n(0), x())}));
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c.items()[i].id, i);

  encoder::TermPool bools{{}, {logic::var("a", Sort::Bool), logic::var("b", Sort::Bool)}};
  auto d = generate_candidates(bools, templates({}));
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.items()[0].formula, logic::implies(logic::var("a", Sort::Bool), logic::var("b", Sort::Bool)));
  EXPECT_EQ(generate_candidates(bools, templates({.int_leq = true, .bool_imp = false})).size(), 0u);
}

TEST(Candidates, EmptySetIsTrue)
{
  CandidateSet c;
  EXPECT_TRUE(c.conjunction().is_true());
  CandidateSet d({logic::le(x(), n(0))});
  d.kill(0);
  EXPECT_TRUE(d.conjunction().is_true());
  EXPECT_EQ(d.size(), 1u);
}

TEST(Candidates, ProjectKeepsOnlyFormulaVariables)
{
  Term f = logic::le(logic::indexed_var("x", Sort::Int, 2), n(3));
  logic::Assignment a{{{"x", 2}, Value::integer(1)}, {{"y", 2}, Value::integer(5)}, {{"x", 1}, Value::integer(0)}};
  EXPECT_EQ(project(a, f), (logic::Assignment{{{"x", 2}, Value::integer(1)}}));
}

TEST(Candidates, FilterKillsFalsifiedConjuncts)
{
  CandidateSet c({logic::le(x(), n(0)), logic::le(n(0), x()), logic::le(logic::var("y", Sort::Int), n(0))});
  auto f = filter(c, {{{"x", 3}, Value::integer(2)}}, 3);
  EXPECT_FALSE(f.items()[0].alive);
  EXPECT_TRUE(f.items()[1].alive);
  EXPECT_TRUE(f.items()[2].alive);  // undefined under the model
  // The input set is unchanged.
  EXPECT_EQ(c.alive_count(), 3u);
}

// Oracle: f is k-inductive for the system and holds on x = 0..depth.
bool verify_counter_invariant(const TransitionSystem& ts, const Term& f, Step k, long depth)
{
  for (long v = 0; v <= depth; ++v) {
    if (logic::evaluate_bool(logic::instantiate_state(f, 0), {{{"x", 0}, Value::integer(v)}}) != true) return false;
  }
  auto s = smt::SolverSession::open({});
  for (Step i = 0; i <= k; ++i) {
    s.assert_formula(logic::instantiate_trans(ts.trans, i));
    s.assert_formula(logic::instantiate_state(f, i));
  }
  return s.entailed(logic::instantiate_state(f, k + 1)).entailed();
}

GeneratorReport run(const TransitionSystem& ts, CandidateSet c, GeneratorOptions o, bool send_m4 = false)
{
  engine::Channel<engine::InvGenToStep> out;
  engine::Channel<engine::BaseToInvGen> in;
  if (send_m4) in.send(engine::StopInvGen{});
  auto report = run_generator(ts, std::move(c), out, in, o, {});
  std::optional<engine::InvGenToStep> last;
  std::size_t messages = 0;
  while (auto m = out.try_receive()) {
    last = std::move(m);
    ++messages;
  }
  EXPECT_EQ(messages, report.emissions.size() + 1);
  EXPECT_TRUE(last && std::holds_alternative<engine::InvGenFinished>(*last));
  return report;
}

CandidateSet counter_candidates(const TransitionSystem& ts)
{
  return generate_candidates(encoder::harvest_terms(ts), templates({}));
}

TEST(Generator, VersionAFindsNonNegativity)
{
  auto ts = sys_inc();
  auto report = run(ts, counter_candidates(ts), {.version = Version::A});
  EXPECT_EQ(report.end_reason, "converged");
  ASSERT_EQ(report.emissions.size(), 1u);
  const auto& m = report.emissions[0];
  EXPECT_TRUE(contains(m.formulas, logic::le(n(0), x())));
  EXPECT_FALSE(contains(m.formulas, logic::le(x(), n(1))));
  for (const auto& f : m.formulas) {
    EXPECT_TRUE(verify_counter_invariant(ts, f, m.proved_at_k, 30)) << logic::to_string(f);
  }
}

TEST(Generator, VersionBEmitsInductiveParts)
{
  auto ts = sys_inc();
  auto report = run(ts, counter_candidates(ts), {.version = Version::B});
  EXPECT_EQ(report.end_reason, "converged");
  ASSERT_FALSE(report.emissions.empty());
  bool nonneg = false;
  for (const auto& m : report.emissions) {
    for (const auto& f : m.formulas) {
      nonneg = nonneg || f == logic::le(n(0), x());
      EXPECT_TRUE(verify_counter_invariant(ts, f, m.proved_at_k, 30)) << logic::to_string(f);
    }
  }
  EXPECT_TRUE(nonneg);
}

TEST(Generator, DeltaEmissionsAreDisjointAndCoverTheFullRun)
{
  auto p = frontend::elaborate(
      "node main() returns (ok:bool); var x, y:int; let x = 0 -> if pre x = 3 then 0 else pre x + 1; "
      "y = 0 -> pre x; ok = x <= 3; tel");
  auto ts = encoder::encode(p);
  auto delta = run(ts, counter_candidates(ts), {.version = Version::B, .delta = true});
  auto full = run(ts, counter_candidates(ts), {.version = Version::B, .delta = false});
  std::set<std::size_t> seen;
  for (const auto& m : delta.emissions) {
    for (auto id : m.ids) EXPECT_TRUE(seen.insert(id).second) << id;
  }
  std::set<std::size_t> all;
  for (const auto& m : full.emissions) all.insert(m.ids.begin(), m.ids.end());
  EXPECT_EQ(seen, all);
}

TEST(Generator, StopsOnM4)
{
  auto ts = sys_inc();
  for (Version v : {Version::A, Version::B}) {
    auto report = run(ts, counter_candidates(ts), {.version = v}, true);
    EXPECT_EQ(report.end_reason, "stopped");
    EXPECT_TRUE(report.emissions.empty());
  }
}

TEST(Generator, MaxKBound)
{
  // x <= k - 1 dies at depth k along x = 0, 1, 2, ...
  std::vector<Term> formulas;
  for (long c = -1; c < 20; ++c) formulas.push_back(logic::le(x(), n(c)));
  auto report = run(sys_inc(), CandidateSet(formulas), {.version = Version::A, .max_k = 5});
  EXPECT_EQ(report.end_reason, "max-k");
  EXPECT_TRUE(report.emissions.empty());
}

TEST(Generator, VersionsAgreeOnCorpus)
{
  // Base filtering at depth k keeps exactly the candidates true in every
  // state reachable in k steps, and each version returns the largest
  // inductive part of what base filtering left. An output proved at depth k
  // is also inductive at any larger depth, so the version that stopped at
  // the larger depth must entail the other's output.
  std::size_t compared = 0;
  for (const auto& e : testing::corpus()) {
    auto ts = encoder::encode(frontend::elaborate(frontend::read_file(testing::corpus_path(e))));
    auto a = run(ts, counter_candidates(ts), {.version = Version::A, .max_k = 40});
    auto b = run(ts, counter_candidates(ts), {.version = Version::B, .max_k = 40});
    if (a.end_reason != "converged" || b.end_reason != "converged") continue;
    ++compared;
    auto conj = [](const GeneratorReport& r) {
      std::vector<Term> all;
      for (const auto& m : r.emissions) all.insert(all.end(), m.formulas.begin(), m.formulas.end());
      return logic::instantiate_state(logic::land(all), 0);
    };
    bool a_first = a.final_k <= b.final_k;
    auto s = smt::SolverSession::open({});
    s.assert_formula(conj(a_first ? b : a));
    EXPECT_TRUE(s.entailed(conj(a_first ? a : b)).entailed()) << e.file;
  }
  EXPECT_EQ(compared, testing::corpus().size());
}

TEST(CandidateProperties, FilterNeverResurrects)
{
  std::mt19937 rng(3);
  std::vector<Term> formulas;
  for (long c = -3; c <= 3; ++c) {
    formulas.push_back(logic::le(x(), n(c)));
    formulas.push_back(logic::le(n(c), x()));
  }
  for (int trial = 0; trial < 100; ++trial) {
    CandidateSet c(formulas);
    std::vector<bool> dead(c.size(), false);
    for (int round = 0; round < 6; ++round) {
      long v = std::uniform_int_distribution<long>(-5, 5)(rng);
      c = filter(std::move(c), {{{"x", 1}, Value::integer(v)}}, 1);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (dead[i]) EXPECT_FALSE(c.items()[i].alive);
        dead[i] = !c.items()[i].alive;
      }
    }
  }
}

}  // namespace
}  // namespace pk::invgen
