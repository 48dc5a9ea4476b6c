#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "pk/cli/cli.hpp"

namespace pk::cli {

namespace fs = std::filesystem;

std::string tsv_header()
{
  return "file\tmode\tverdict\tk\ttime_s\tinv_emitted\tinv_used\tchecks_base\tchecks_step";
}

std::string to_tsv(const BenchRecord& r)
{
  std::ostringstream os;
  os << r.file << '\t' << r.mode << '\t' << r.verdict << '\t' << r.k << '\t' << std::fixed << std::setprecision(3)
     << r.time_s << '\t' << r.inv_emitted << '\t' << r.inv_used << '\t' << r.checks_base << '\t' << r.checks_step;
  return os.str();
}

std::optional<BenchRecord> parse_tsv_row(const std::string& line)
{
  std::vector<std::string> cols;
  std::istringstream is(line);
  std::string col;
  while (std::getline(is, col, '\t')) cols.push_back(col);
  if (cols.size() != 9 || cols[0] == "file") return std::nullopt;
  try {
    BenchRecord r;
    r.file = cols[0];
    r.mode = cols[1];
    r.verdict = cols[2];
    r.k = std::stol(cols[3]);
    r.time_s = std::stod(cols[4]);
    r.inv_emitted = std::stoul(cols[5]);
    r.inv_used = std::stoul(cols[6]);
    r.checks_base = std::stoul(cols[7]);
    r.checks_step = std::stoul(cols[8]);
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<BenchRecord> read_tsv(std::istream& in)
{
  std::vector<BenchRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto r = parse_tsv_row(line)) out.push_back(std::move(*r));
  }
  return out;
}

std::vector<ModeSummary> summarize(const std::vector<BenchRecord>& records)
{
  std::vector<ModeSummary> out;
  std::map<std::string, std::size_t> index;
  std::vector<std::array<double, 3>> totals;
  for (const auto& r : records) {
    auto [it, inserted] = index.try_emplace(r.mode, out.size());
    if (inserted) {
      out.push_back(ModeSummary{r.mode});
      totals.push_back({0, 0, 0});
    }
    auto& s = out[it->second];
    auto& t = totals[it->second];
    ++s.runs;
    if (r.verdict == "valid") {
      ++s.valid;
      t[0] += r.time_s;
    } else if (r.verdict == "invalid") {
      ++s.invalid;
      t[1] += r.time_s;
    } else {
      ++s.unknown;
      t[2] += r.time_s;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto& s = out[i];
    if (s.valid) s.mean_time_valid = totals[i][0] / s.valid;
    if (s.invalid) s.mean_time_invalid = totals[i][1] / s.invalid;
    if (s.unknown) s.mean_time_unknown = totals[i][2] / s.unknown;
  }
  return out;
}

void print_summary(const std::vector<ModeSummary>& summary, std::ostream& out)
{
  out << "mode\truns\tvalid\tinvalid\tunknown\tsolved_pct\tmean_s_valid\tmean_s_invalid\tmean_s_unknown\n";
  out << std::fixed;
  for (const auto& s : summary) {
    out << s.mode << '\t' << s.runs << '\t' << s.valid << '\t' << s.invalid << '\t' << s.unknown << '\t'
        << std::setprecision(1) << s.solved_percent() << '\t' << std::setprecision(3) << s.mean_time_valid << '\t'
        << s.mean_time_invalid << '\t' << s.mean_time_unknown << '\n';
  }
}

std::vector<BenchRecord> bench(const std::string& dir, const std::vector<engine::Mode>& modes, const RunConfig& config,
                               const std::string& tsv_path, std::ostream& log)
{
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".lus") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  if (ec) log << "warning: cannot read " << dir << ": " << ec.message() << '\n';

  bool fresh = true;
  {
    std::ifstream probe(tsv_path);
    fresh = !probe || probe.peek() == std::ifstream::traits_type::eof();
  }
  std::ofstream tsv(tsv_path, std::ios::app);
  if (fresh) tsv << tsv_header() << '\n' << std::flush;
  if (files.empty()) log << "warning: no .lus files in " << dir << '\n';

  std::vector<BenchRecord> records;
  for (const auto& file : files) {
    for (auto mode : modes) {
      RunConfig c = config;
      c.engine.mode = mode;
      c.stats_path.clear();
      c.per_property = false;
      c.format = Format::Human;
      std::ostringstream sink;
      BenchRecord rec;
      try {
        rec = check_file(file, c, sink, log).record;
      } catch (const std::exception& e) {
        log << file << ": " << e.what() << '\n';
        rec.file = file;
        rec.mode = std::string(engine::to_string(mode));
        rec.verdict = "unknown";
      }
      tsv << to_tsv(rec) << '\n' << std::flush;
      log << file << '\t' << rec.mode << '\t' << rec.verdict << '\n';
      records.push_back(std::move(rec));
    }
  }
  return records;
}

}  // namespace pk::cli
