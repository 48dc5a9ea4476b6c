#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pk/cli/cli.hpp"

namespace pk::cli {

namespace {

std::vector<std::string> split_list(const std::string& text)
{
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int combine(int a, int b)
{
  auto rank = [](int c) {
    switch (c) {
      case kExitUsage: return 6;
      case kExitSolver: return 5;
      case kExitFrontend: return 4;
      case kExitInvalid: return 3;
      case kExitUnknown: return 2;
      default: return 1;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

}  // namespace

int run_main(int argc, char** argv)
{
  CLI::App app{"Parallel k-induction model checker for Lustre programs", "pk-check"};
  app.require_subcommand(0, 1);

  RunConfig config;
  auto& eo = config.engine;
  std::string mode = "inc-inv";
  double timeout = 100.0;
  unsigned max_k = 200;
  std::string solver_cmd;
  std::string templates = "int-leq,bool-imp";
  std::string inv_delta = "on";
  std::string format = "human";
  std::string main_node;
  long check_timeout_ms = 0;
  long step_delay_ms = 0;
  std::size_t int_terms = eo.caps.int_terms;
  std::size_t bool_terms = eo.caps.bool_terms;

  app.add_option("--mode", mode, "k-induct | no-inc-inv | inc-inv")
      ->check(CLI::IsMember({"k-induct", "no-inc-inv", "inc-inv"}))
      ->capture_default_str();
  app.add_option("--timeout", timeout, "Wall-clock limit in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-k", max_k, "Deepest induction depth")->capture_default_str();
  app.add_option("--solver-cmd", solver_cmd, "Solver command line (default $PK_SOLVER, else 'z3 -in')");
  app.add_flag("--path-compression", eo.path_compression, "Exclude repeated states and repeated initial states");
  app.add_option("--inv-templates", templates, "Comma-separated subset of int-leq,bool-imp")->capture_default_str();
  app.add_option("--inv-delta", inv_delta, "Send only new invariants (on|off)")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  app.add_option("--dump-invariants", config.dump_invariants, "Append every invariant message to this file");
  app.add_flag("--dump-ts", config.dump_ts, "Print the transition system in SMT-LIB before checking");
  app.add_option("--dump-smt", eo.solver.dump_dir, "Write each solver dialogue to this directory");
  app.add_option("--main", main_node, "Main node (overrides --%MAIN)");
  app.add_option("--format", format, "human | tsv")->check(CLI::IsMember({"human", "tsv"}))->capture_default_str();
  app.add_option("--stats", config.stats_path, "Append a TSV record per run to this file");
  app.add_option("--check-timeout-ms", check_timeout_ms, "Per-check solver limit, 0 for none")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--int-terms", int_terms, "Cap on harvested int terms")->capture_default_str();
  app.add_option("--bool-terms", bool_terms, "Cap on harvested bool terms")->capture_default_str();
  app.add_flag("--pool-from-property", eo.caps.from_property, "Also harvest terms from the property");
  app.add_option("--step-delay-ms", step_delay_ms, "Sleep before every inductive step check")
      ->check(CLI::NonNegativeNumber)
      ->group("");
  app.add_option("files", config.inputs, "Lustre files");

  auto* bench_cmd = app.add_subcommand("bench", "Run every .lus file of a directory under several modes");
  bench_cmd->fallthrough();
  std::string bench_dir;
  std::string bench_modes = "k-induct,no-inc-inv,inc-inv";
  std::string bench_out = "bench.tsv";
  bench_cmd->add_option("dir", bench_dir, "Directory of .lus files")->required();
  bench_cmd->add_option("--modes", bench_modes, "Comma-separated modes")->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "TSV output (appended)")->capture_default_str();

  auto* summary_cmd = app.add_subcommand("summary", "Summarize a bench TSV file");
  std::string summary_in;
  summary_cmd->add_option("tsv", summary_in, "TSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  eo.mode = *engine::parse_mode(mode);
  eo.timeout = std::chrono::duration<double>(timeout);
  eo.max_k = max_k;
  if (solver_cmd.empty()) {
    if (const char* env = std::getenv("PK_SOLVER"); env && *env) solver_cmd = env;
  }
  if (!solver_cmd.empty()) eo.solver.command = solver_cmd;
  eo.solver.check_timeout = std::chrono::milliseconds(check_timeout_ms);
  eo.inv_delta = inv_delta == "on";
  eo.step_delay = std::chrono::milliseconds(step_delay_ms);
  eo.caps.int_terms = int_terms;
  eo.caps.bool_terms = bool_terms;
  eo.templates = {false, false};
  for (const auto& t : split_list(templates)) {
    if (t == "int-leq") {
      eo.templates.int_leq = true;
    } else if (t == "bool-imp") {
      eo.templates.bool_imp = true;
    } else {
      std::cerr << "unknown template '" << t << "'\n";
      return kExitUsage;
    }
  }
  config.format = format == "tsv" ? Format::Tsv : Format::Human;
  if (!main_node.empty()) config.main = main_node;

  if (*summary_cmd) {
    std::ifstream in(summary_in);
    if (!in) {
      std::cerr << "cannot open " << summary_in << '\n';
      return kExitUsage;
    }
    print_summary(summarize(read_tsv(in)), std::cout);
    return 0;
  }

  if (*bench_cmd) {
    std::vector<engine::Mode> modes;
    for (const auto& m : split_list(bench_modes)) {
      auto parsed = engine::parse_mode(m);
      if (!parsed) {
        std::cerr << "unknown mode '" << m << "'\n";
        return kExitUsage;
      }
      modes.push_back(*parsed);
    }
    auto records = bench(bench_dir, modes, config, bench_out, std::cerr);
    print_summary(summarize(records), std::cout);
    return 0;
  }

  if (config.inputs.empty()) {
    std::cerr << app.help();
    return kExitUsage;
  }
  int code = kExitValid;
  for (const auto& file : config.inputs) {
    if (config.inputs.size() > 1 && config.format == Format::Human) std::cout << "== " << file << '\n';
    code = combine(code, check_file(file, config, std::cout, std::cerr).exit_code);
  }
  return code;
}

}  // namespace pk::cli
