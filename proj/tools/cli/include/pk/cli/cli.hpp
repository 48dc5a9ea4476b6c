#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pk/engine/options.hpp"
#include "pk/engine/orchestrator.hpp"

namespace pk::cli {

enum ExitCode : int {
  kExitValid = 0,
  kExitUsage = 1,
  kExitFrontend = 2,
  kExitSolver = 3,
  kExitInvalid = 10,
  kExitUnknown = 20,
};

enum class Format { Human, Tsv };

struct RunConfig {
  std::vector<std::string> inputs;
  engine::EngineOptions engine;
  std::optional<std::string> main;
  Format format = Format::Human;
  /// Append one TSV row per run to this file.
  std::string stats_path;
  /// Log every M3 payload to this file.
  std::string dump_invariants;
  bool dump_ts = false;
  /// On an Invalid conjunction, check each property on its own.
  bool per_property = true;
};

struct BenchRecord {
  std::string file;
  std::string mode;
  std::string verdict;
  long k = -1;
  double time_s = 0;
  std::size_t inv_emitted = 0;
  std::size_t inv_used = 0;
  std::size_t checks_base = 0;
  std::size_t checks_step = 0;
};

std::string tsv_header();
std::string to_tsv(const BenchRecord& r);
/// nullopt for the header, blank lines and malformed rows.
std::optional<BenchRecord> parse_tsv_row(const std::string& line);
std::vector<BenchRecord> read_tsv(std::istream& in);

int exit_code(const engine::Verdict& v);
BenchRecord make_record(const std::string& file, engine::Mode mode, const engine::RunResult& r);

struct CheckOutcome {
  int exit_code = kExitUnknown;
  std::optional<engine::RunResult> result;
  BenchRecord record;
};

/// Elaborates, encodes and checks one file, printing the verdict to `out` and
/// diagnostics to `err`. Never throws for bad input.
CheckOutcome check_file(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err);

struct ModeSummary {
  std::string mode;
  std::size_t runs = 0;
  std::size_t valid = 0;
  std::size_t invalid = 0;
  std::size_t unknown = 0;
  double mean_time_valid = 0;
  double mean_time_invalid = 0;
  double mean_time_unknown = 0;

  double solved_percent() const { return runs ? 100.0 * static_cast<double>(valid + invalid) / runs : 0.0; }
};

/// Per-mode summary in order of first appearance.
std::vector<ModeSummary> summarize(const std::vector<BenchRecord>& records);
void print_summary(const std::vector<ModeSummary>& summary, std::ostream& out);

/// Runs every `.lus` file of `dir` (sorted by name) under every mode and
/// appends the rows to `tsv_path` (header written when the file is new or
/// empty). Per-file failures become Unknown rows.
std::vector<BenchRecord> bench(const std::string& dir, const std::vector<engine::Mode>& modes, const RunConfig& config,
                               const std::string& tsv_path, std::ostream& log);

/// Command line entry point.
int run_main(int argc, char** argv);

}  // namespace pk::cli
