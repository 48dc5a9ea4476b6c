#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "pk/encoder/encoder.hpp"
#include "pk/engine/channel.hpp"
#include "pk/engine/orchestrator.hpp"
#include "pk/frontend/frontend.hpp"
#include "pk/logic/printer.hpp"
#include "support/random_program.hpp"
#include "support/soundness.hpp"
#include "support/stream_interp.hpp"

namespace pk::testing {
namespace {

using engine::Mode;
using engine::Verdict;
using logic::Value;

engine::EngineOptions options(Mode m)
{
  engine::EngineOptions o;
  o.mode = m;
  o.max_k = 15;
  o.timeout = std::chrono::duration<double>(20);
  return o;
}

std::vector<Valuation> random_run(const StreamInterpreter& interp, std::size_t steps, std::mt19937& rng)
{
  std::vector<Valuation> inputs(steps);
  for (auto& in : inputs) {
    for (const auto& d : interp.node().inputs) {
      int r = std::uniform_int_distribution<int>(-3, 6)(rng);
      in[d.name] = d.sort == logic::Sort::Bool ? Value::boolean(r % 2) : Value::integer(r);
    }
  }
  return interp.run(inputs);
}

logic::Assignment as_assignment(const std::vector<Valuation>& run)
{
  logic::Assignment a;
  for (logic::Step i = 0; i < run.size(); ++i) {
    for (const auto& [name, v] : run[i]) a[{name, i}] = v;
  }
  return a;
}

TEST(EngineProperties, ModesAgreeAndVerdictsAreSound)
{
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    std::string src = random_program(seed);
    auto p = frontend::elaborate(src);
    auto ts = encoder::encode(p);
    std::optional<Verdict> definite;
    for (Mode m : {Mode::KInduct, Mode::NoIncInv, Mode::IncInv}) {
      auto r = engine::orchestrate(ts, options(m));
      const auto& v = r.verdict;
      EXPECT_NE(v.reason, "internal-error") << src << v.diagnostic;
      if (auto problem = check_verdict(p, ts, v)) ADD_FAILURE() << to_string(m) << ": " << *problem << "\n" << src;
      if (v.kind == Verdict::Kind::Unknown) continue;
      if (!definite) {
        definite = v;
        continue;
      }
      EXPECT_EQ(v.kind, definite->kind) << to_string(m) << "\n" << src;
      if (v.kind == Verdict::Kind::Invalid && definite->kind == Verdict::Kind::Invalid) {
        EXPECT_EQ(v.k, definite->k) << "shortest counterexample differs\n" << src;
      }
    }
  }
}

TEST(EngineProperties, EmittedInvariantsHoldOnExecutions)
{
  std::mt19937 rng(5);
  for (std::uint64_t seed = 40; seed < 60; ++seed) {
    auto p = frontend::elaborate(random_program(seed));
    auto ts = encoder::encode(p);
    auto r = engine::orchestrate(ts, options(Mode::IncInv));
    StreamInterpreter interp(p);
    for (int trial = 0; trial < 5; ++trial) {
      auto a = as_assignment(random_run(interp, 12, rng));
      for (const auto& m : r.emissions) {
        for (const auto& f : m.formulas) {
          for (logic::Step i = 0; i < 12; ++i) {
            auto v = logic::evaluate_bool(logic::instantiate_state(f, i), a);
            EXPECT_NE(v, false) << logic::to_string(f) << " at step " << i;
          }
        }
      }
    }
  }
}

TEST(ChannelProperties, FifoUnderConcurrentProducers)
{
  engine::Channel<std::pair<int, int>> ch;
  {
    std::jthread a([&] {
      for (int i = 0; i < 2000; ++i) ch.send({0, i});
    });
    std::jthread b([&] {
      for (int i = 0; i < 2000; ++i) ch.send({1, i});
    });
  }
  int next[2] = {0, 0};
  std::size_t total = 0;
  while (auto m = ch.try_receive()) {
    EXPECT_EQ(m->second, next[m->first]++);
    ++total;
  }
  EXPECT_EQ(total, 4000u);
}

}  // namespace
}  // namespace pk::testing
