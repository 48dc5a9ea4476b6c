#include <benchmark/benchmark.h>

#include "pk/encoder/encoder.hpp"
#include "pk/encoder/term_pool.hpp"
#include "pk/engine/orchestrator.hpp"
#include "pk/engine/trace.hpp"
#include "pk/frontend/frontend.hpp"
#include "pk/invgen/candidates.hpp"
#include "pk/logic/evaluate.hpp"
#include "pk/logic/printer.hpp"

namespace {

using namespace pk;

std::string corpus(const char* name)
{
  return frontend::read_file(std::string(PK_CORPUS_DIR) + "/" + name);
}

void BM_Elaborate(benchmark::State& state)
{
  std::string src = corpus("v2_wrap_ne6.lus");
  for (auto _ : state) benchmark::DoNotOptimize(frontend::elaborate(src));
}
BENCHMARK(BM_Elaborate);

void BM_Encode(benchmark::State& state)
{
  auto p = frontend::elaborate(corpus("n3_hold.lus"));
  for (auto _ : state) benchmark::DoNotOptimize(encoder::encode(p));
}
BENCHMARK(BM_Encode);

void BM_EvaluateUnrolled(benchmark::State& state)
{
  auto ts = encoder::encode(frontend::elaborate(corpus("i8_mod16.lus")));
  const auto depth = static_cast<logic::Step>(state.range(0));
  std::vector<logic::Term> parts;
  for (logic::Step i = 0; i < depth; ++i) parts.push_back(logic::instantiate_trans(ts.trans, i));
  logic::Term f = logic::land(parts);
  // A real execution, so every conjunct is evaluated.
  logic::Assignment a = engine::extract_trace({}, ts.with_property(logic::bool_const(false), "none"), depth).values;
  for (auto _ : state) benchmark::DoNotOptimize(logic::evaluate(f, a));
}
BENCHMARK(BM_EvaluateUnrolled)->Arg(4)->Arg(16)->Arg(64);

void BM_ToSmtlib(benchmark::State& state)
{
  auto ts = encoder::encode(frontend::elaborate(corpus("n2_drift.lus")));
  logic::Term t = logic::instantiate_trans(ts.trans, 7);
  for (auto _ : state) benchmark::DoNotOptimize(logic::to_smtlib(t));
}
BENCHMARK(BM_ToSmtlib);

void BM_HarvestAndGenerate(benchmark::State& state)
{
  auto ts = encoder::encode(frontend::elaborate(corpus("n3_hold.lus")));
  for (auto _ : state) {
    auto pool = encoder::harvest_terms(ts);
    benchmark::DoNotOptimize(invgen::generate_candidates(pool, invgen::templates({})));
  }
}
BENCHMARK(BM_HarvestAndGenerate);

void BM_FilterCandidates(benchmark::State& state)
{
  auto ts = encoder::encode(frontend::elaborate(corpus("n2_drift.lus")));
  auto c = invgen::generate_candidates(encoder::harvest_terms(ts), invgen::templates({}));
  logic::Assignment a;
  for (const auto& v : ts.vars) {
    a[{v.name, 3}] = v.sort == logic::Sort::Int ? logic::Value::integer(5) : logic::Value::default_of(v.sort);
  }
  for (auto _ : state) benchmark::DoNotOptimize(invgen::filter(c, a, 3));
}
BENCHMARK(BM_FilterCandidates);

void BM_CheckCorpusProgram(benchmark::State& state)
{
  auto ts = encoder::encode(frontend::elaborate(corpus("i8_mod16.lus")));
  engine::EngineOptions o;
  o.mode = engine::Mode::KInduct;
  for (auto _ : state) benchmark::DoNotOptimize(engine::orchestrate(ts, o));
}
BENCHMARK(BM_CheckCorpusProgram)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
