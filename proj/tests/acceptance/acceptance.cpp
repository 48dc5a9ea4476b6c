// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "pk/encoder/encoder.hpp"
#include "pk/engine/orchestrator.hpp"
#include "pk/engine/trace.hpp"
#include "pk/frontend/frontend.hpp"
#include "pk/logic/printer.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/random_program.hpp"
#include "support/sequential.hpp"
#include "support/soundness.hpp"
#include "support/stream_interp.hpp"

namespace {

using namespace pk;
using engine::Mode;
using engine::Verdict;
using testing::CorpusEntry;
using Clock = std::chrono::steady_clock;

constexpr double kCorpusBudgetSeconds = 120.0;
constexpr std::size_t kOracleDepth = 30;
constexpr logic::Step kInductMaxK = 30;
constexpr std::size_t kMinNonInductive = 2;
constexpr auto kInjectedStepDelay = std::chrono::milliseconds(5000);
constexpr double kParallelBoundSeconds = 2.0;
constexpr double kSequentialBoundSeconds = 5.0;
constexpr std::size_t kFuzzPrograms = 500;
constexpr double kFuzzBudgetSeconds = 600.0;
constexpr std::size_t kEncodingSteps = 8;
constexpr int kEncodingRunsPerProgram = 4;

const Mode kModes[] = {Mode::KInduct, Mode::NoIncInv, Mode::IncInv};

double seconds_since(Clock::time_point t)
{
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Report {
  int failures = 0;

  void line(int n, const std::string& name, bool pass, const std::string& detail)
  {
    if (!pass) ++failures;
    std::cout << "criterion " << n << " [" << name << "]: " << (pass ? "PASS" : "FAIL") << " - " << detail << std::endl;
  }
};

struct Loaded {
  CorpusEntry entry;
  frontend::TypedProgram program;
  encoder::TransitionSystem ts;
};

engine::EngineOptions options(Mode m)
{
  engine::EngineOptions o;
  o.mode = m;
  o.timeout = std::chrono::duration<double>(60);
  return o;
}

std::string describe(const Verdict& v)
{
  return engine::headline(v);
}

// Oracle classification of a corpus entry: shortest violation depth or none
// within kOracleDepth, by both unrolling and interpreter search.
struct OracleView {
  std::optional<std::size_t> bmc_depth;
  std::optional<std::size_t> explore_depth;
  bool explore_complete = false;
};

OracleView oracle(const Loaded& l)
{
  OracleView v;
  v.bmc_depth = testing::bmc(l.ts, l.ts.property(), kOracleDepth);
  testing::StreamInterpreter interp(l.program);
  auto ex = testing::explore(interp, l.entry.bool_only ? 64 : 10, testing::int_domain_of(l.program.program));
  v.explore_depth = ex.violation_depth;
  v.explore_complete = ex.complete;
  return v;
}

// Criterion 3 helper: the conjunction of every conjunct emitted up to and
// including message m is proved_at_k(m)-inductive and holds initially for
// that many steps, so an independent k-induct run must prove it.
std::optional<std::string> reverify(const Loaded& l, const engine::RunResult& r)
{
  std::vector<logic::Term> so_far;
  for (const auto& m : r.emissions) {
    so_far.insert(so_far.end(), m.formulas.begin(), m.formulas.end());
    auto ts = l.ts.with_property(logic::land(so_far), "invariants");
    auto o = options(Mode::KInduct);
    o.max_k = m.proved_at_k + 2;
    auto check = engine::orchestrate(ts, o);
    if (check.verdict.kind != Verdict::Kind::Valid) {
      return "emission at k=" + std::to_string(m.proved_at_k) + " not re-proved: " + describe(check.verdict);
    }
  }
  testing::StreamInterpreter interp(l.program);
  std::vector<std::set<testing::Valuation>> states;
  if (l.entry.bool_only) {
    auto ex = testing::explore(interp, 64, {});
    if (!ex.complete) return "explicit-state search incomplete";
    states.push_back(ex.reachable);
  }
  std::mt19937 rng(17);
  std::set<testing::Valuation> sampled;
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<testing::Valuation> inputs(20);
    for (auto& in : inputs) {
      for (const auto& d : interp.node().inputs) {
        int x = std::uniform_int_distribution<int>(-3, 9)(rng);
        in[d.name] = d.sort == logic::Sort::Bool  ? logic::Value::boolean(x % 2)
                     : d.sort == logic::Sort::Int ? logic::Value::integer(x)
                                                  : logic::Value::real(logic::Rational(x, 2));
      }
    }
    for (auto& s : interp.run(inputs)) sampled.insert(s);
  }
  states.push_back(sampled);
  for (const auto& set : states) {
    for (const auto& s : set) {
      logic::Assignment a;
      for (const auto& [name, v] : s) a[{name, 0}] = v;
      for (const auto& m : r.emissions) {
        for (const auto& f : m.formulas) {
          if (logic::evaluate_bool(logic::instantiate_state(f, 0), a) == false) {
            return "conjunct " + logic::to_string(f) + " false in a reachable state";
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

int main()
{
  Report report;

  std::vector<Loaded> corpus;
  for (const auto& e : testing::corpus()) {
    auto p = frontend::elaborate(frontend::read_file(testing::corpus_path(e)));
    auto ts = encoder::encode(p);
    corpus.push_back({e, std::move(p), std::move(ts)});
  }

  // Corpus runs shared by criteria 1 to 4.
  std::map<std::pair<std::string, Mode>, engine::RunResult> runs;
  auto corpus_start = Clock::now();
  for (const auto& l : corpus) {
    for (Mode m : kModes) runs[{l.entry.file, m}] = engine::orchestrate(l.ts, options(m));
  }
  double corpus_seconds = seconds_since(corpus_start);

  // 1. Micro-corpus correctness.
  {
    std::ostringstream problems;
    std::size_t decided = 0;
    for (const auto& l : corpus) {
      auto o = oracle(l);
      bool oracle_ok = l.entry.valid ? (!o.bmc_depth && !o.explore_depth)
                                     : (o.bmc_depth == l.entry.cex_k && o.explore_depth == l.entry.cex_k);
      if (l.entry.bool_only && !o.explore_complete) oracle_ok = false;
      if (!oracle_ok) problems << l.entry.file << ": oracle disagrees with the table; ";
      for (Mode m : kModes) {
        const auto& v = runs.at({l.entry.file, m}).verdict;
        if (v.kind == Verdict::Kind::Unknown) continue;
        ++decided;
        bool ok = l.entry.valid ? v.kind == Verdict::Kind::Valid
                                : v.kind == Verdict::Kind::Invalid && v.k == l.entry.cex_k;
        if (!ok) problems << l.entry.file << " " << engine::to_string(m) << ": " << describe(v) << "; ";
      }
    }
    bool in_budget = corpus_seconds < kCorpusBudgetSeconds;
    if (!in_budget) problems << "corpus took " << corpus_seconds << " s; ";
    std::ostringstream detail;
    detail << corpus.size() << " programs x 3 modes, " << decided << " decided, wall " << corpus_seconds << " s";
    if (!problems.str().empty()) detail << "; " << problems.str();
    report.line(1, "micro-corpus correctness", problems.str().empty(), detail.str());
  }

  // 2. Precision uplift.
  {
    std::ostringstream problems;
    std::size_t non_inductive_unknown = 0;
    for (const auto& l : corpus) {
      if (!l.entry.valid) continue;
      for (Mode m : {Mode::NoIncInv, Mode::IncInv}) {
        const auto& v = runs.at({l.entry.file, m}).verdict;
        if (v.kind != Verdict::Kind::Valid) problems << l.entry.file << " " << engine::to_string(m) << ": " << describe(v) << "; ";
      }
      if (l.entry.induct_k) continue;
      auto o = options(Mode::KInduct);
      o.max_k = kInductMaxK;
      auto v = engine::orchestrate(l.ts, o).verdict;
      if (v.kind == Verdict::Kind::Unknown) {
        ++non_inductive_unknown;
      } else {
        problems << l.entry.file << " k-induct: " << describe(v) << "; ";
      }
    }
    if (non_inductive_unknown < kMinNonInductive) problems << "too few non-inductive programs; ";
    std::ostringstream detail;
    detail << "k-induct (max_k=" << kInductMaxK << ") unknown on " << non_inductive_unknown
           << " non-inductive valid programs; invariant modes prove every valid program";
    if (!problems.str().empty()) detail << "; " << problems.str();
    report.line(2, "precision uplift", problems.str().empty(), detail.str());
  }

  // 3. Invariant soundness.
  {
    std::size_t conjuncts = 0;
    std::ostringstream problems;
    for (const auto& l : corpus) {
      for (Mode m : {Mode::NoIncInv, Mode::IncInv}) {
        const auto& r = runs.at({l.entry.file, m});
        for (const auto& e : r.emissions) conjuncts += e.formulas.size();
        if (auto p = reverify(l, r)) problems << l.entry.file << " " << engine::to_string(m) << ": " << *p << "; ";
      }
    }
    std::ostringstream detail;
    detail << conjuncts << " emitted conjuncts re-verified";
    if (!problems.str().empty()) detail << "; " << problems.str();
    report.line(3, "invariant soundness", problems.str().empty(), detail.str());
  }

  // 4. Incremental ordering.
  {
    std::size_t messages = 0;
    std::ostringstream problems;
    for (const auto& l : corpus) {
      const auto& r = runs.at({l.entry.file, Mode::IncInv});
      std::optional<logic::Step> last_k;
      std::set<std::size_t> ids;
      for (const auto& m : r.emissions) {
        ++messages;
        if (last_k && m.proved_at_k <= *last_k) problems << l.entry.file << ": k not increasing; ";
        last_k = m.proved_at_k;
        for (auto id : m.ids) {
          if (!ids.insert(id).second) problems << l.entry.file << ": id " << id << " sent twice; ";
        }
      }
    }
    std::ostringstream detail;
    detail << messages << " inc-inv messages checked";
    if (!problems.str().empty()) detail << "; " << problems.str();
    report.line(4, "incremental ordering", problems.str().empty(), detail.str());
  }

  // 5. Parallel speed with an expensive inductive step.
  {
    auto p = frontend::elaborate(frontend::read_file(testing::data_path("inc_lt2.lus")));
    auto ts = encoder::encode(p);
    std::ostringstream detail;
    bool pass = true;
    for (Mode m : {Mode::KInduct, Mode::IncInv}) {
      auto o = options(m);
      o.step_delay = kInjectedStepDelay;
      auto t = Clock::now();
      auto r = engine::orchestrate(ts, o);
      double s = seconds_since(t);
      bool ok = r.verdict.kind == Verdict::Kind::Invalid && s < kParallelBoundSeconds;
      pass = pass && ok;
      detail << engine::to_string(m) << " " << describe(r.verdict) << " in " << s << " s; ";
    }
    auto seq = testing::sequential_kinduction(ts, ts.property(), 10, kInjectedStepDelay);
    bool seq_ok = seq.verdict.kind == Verdict::Kind::Invalid && seq.wall.count() > kSequentialBoundSeconds;
    pass = pass && seq_ok;
    detail << "sequential " << describe(seq.verdict) << " in " << seq.wall.count() << " s";
    report.line(5, "parallel speed", pass, detail.str());
  }

  // 6 and 7 share the fuzz set.
  std::size_t fuzz_invalid = 0, fuzz_valid = 0, fuzz_unknown = 0;
  std::ostringstream fuzz_problems, flip_problems;
  std::size_t flips_checked = 0;
  double fuzz_seconds = 0;
  {
    auto t = Clock::now();
    for (std::uint64_t seed = 0; seed < kFuzzPrograms; ++seed) {
      std::string src = testing::random_program(seed);
      auto p = frontend::elaborate(src);
      auto ts = encoder::encode(p);
      auto o = options(Mode::IncInv);
      o.max_k = 20;
      o.timeout = std::chrono::duration<double>(10);
      auto r = engine::orchestrate(ts, o);
      switch (r.verdict.kind) {
        case Verdict::Kind::Invalid: ++fuzz_invalid; break;
        case Verdict::Kind::Valid: ++fuzz_valid; break;
        case Verdict::Kind::Unknown: ++fuzz_unknown; break;
      }
      if (auto problem = testing::check_verdict(p, ts, r.verdict)) {
        fuzz_problems << "seed " << seed << ": " << *problem << "; ";
      }
      o.path_compression = true;
      auto c = engine::orchestrate(ts, o);
      if (r.verdict.kind != Verdict::Kind::Unknown && c.verdict.kind != Verdict::Kind::Unknown) {
        ++flips_checked;
        if (r.verdict.kind != c.verdict.kind) {
          flip_problems << "seed " << seed << ": " << describe(r.verdict) << " vs " << describe(c.verdict) << "; ";
        }
      }
    }
    fuzz_seconds = seconds_since(t);
  }

  // 6. Trace validity.
  {
    std::ostringstream problems;
    problems << fuzz_problems.str();
    for (const auto& l : corpus) {
      for (Mode m : kModes) {
        const auto& v = runs.at({l.entry.file, m}).verdict;
        if (v.kind != Verdict::Kind::Invalid) continue;
        if (auto viol = engine::validate_trace(l.ts, v.trace, l.ts.property())) {
          problems << l.entry.file << ": " << viol->what << "; ";
        }
      }
    }
    bool in_budget = fuzz_seconds < kFuzzBudgetSeconds;
    std::ostringstream detail;
    detail << kFuzzPrograms << " programs: " << fuzz_valid << " valid, " << fuzz_invalid << " invalid, " << fuzz_unknown
           << " unknown, wall " << fuzz_seconds << " s (both compression settings)";
    if (!problems.str().empty()) detail << "; " << problems.str();
    report.line(6, "trace validity", problems.str().empty() && in_budget, detail.str());
  }

  // 7. Path-compression conservativity.
  {
    std::ostringstream problems;
    problems << flip_problems.str();
    for (const auto& l : corpus) {
      for (Mode m : kModes) {
        auto o = options(m);
        o.path_compression = true;
        auto c = engine::orchestrate(l.ts, o).verdict;
        const auto& plain = runs.at({l.entry.file, m}).verdict;
        if (c.kind == Verdict::Kind::Unknown || plain.kind == Verdict::Kind::Unknown) continue;
        ++flips_checked;
        if (c.kind != plain.kind) problems << l.entry.file << " " << engine::to_string(m) << " flipped; ";
      }
    }
    std::string designated;
    bool reduced = false;
    for (const auto& l : corpus) {
      if (!l.entry.compressed_k) continue;
      designated = l.entry.file;
      auto o = options(Mode::KInduct);
      o.max_k = kInductMaxK;
      auto plain = engine::orchestrate(l.ts, o).verdict;
      o.path_compression = true;
      auto c = engine::orchestrate(l.ts, o).verdict;
      reduced = plain.kind == Verdict::Kind::Unknown && c.kind == Verdict::Kind::Valid && c.k == *l.entry.compressed_k;
      problems << designated << ": " << describe(plain) << " -> " << describe(c) << "; ";
    }
    std::ostringstream detail;
    detail << flips_checked << " definite pairs compared; " << problems.str();
    report.line(7, "path-compression conservativity",
                reduced && flip_problems.str().empty() && problems.str().find("flipped") == std::string::npos,
                detail.str());
  }

  // 8. Encoding oracle.
  {
    std::ostringstream problems;
    std::size_t executions = 0;
    std::mt19937 rng(8);
    for (const auto& l : corpus) {
      testing::StreamInterpreter interp(l.program);
      for (int trial = 0; trial < kEncodingRunsPerProgram; ++trial) {
        std::vector<testing::Valuation> inputs(kEncodingSteps);
        for (auto& in : inputs) {
          for (const auto& d : interp.node().inputs) {
            int x = std::uniform_int_distribution<int>(-4, 9)(rng);
            in[d.name] = d.sort == logic::Sort::Bool  ? logic::Value::boolean(x % 2)
                         : d.sort == logic::Sort::Int ? logic::Value::integer(x)
                                                      : logic::Value::real(logic::Rational(x, 2));
          }
        }
        std::vector<logic::Value> nil;
        for (auto s : interp.pre_sorts()) {
          int x = std::uniform_int_distribution<int>(-4, 9)(rng);
          nil.push_back(s == logic::Sort::Bool  ? logic::Value::boolean(x % 2)
                        : s == logic::Sort::Int ? logic::Value::integer(x)
                                                : logic::Value::real(x));
        }
        auto run = interp.run(inputs, &nil);
        ++executions;
        if (!testing::encoding_admits(l.ts, run)) problems << l.entry.file << " run " << trial << " rejected; ";
        if (testing::encoding_admits_by_eval(l.ts, run) == false) {
          problems << l.entry.file << " run " << trial << " fails by evaluation; ";
        }
      }
    }
    std::ostringstream detail;
    detail << executions << " executions of " << kEncodingSteps << " steps";
    if (!problems.str().empty()) detail << "; " << problems.str();
    report.line(8, "encoding oracle", problems.str().empty(), detail.str());
  }

  std::cout << (report.failures == 0 ? "all criteria pass" : std::to_string(report.failures) + " criteria fail")
            << std::endl;
  return report.failures == 0 ? 0 : 1;
}
