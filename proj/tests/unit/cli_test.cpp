#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "pk/cli/cli.hpp"
#include "support/corpus.hpp"

namespace pk::cli {
namespace {

namespace fs = std::filesystem;

struct Output {
  int code = -1;
  std::string out;
  std::vector<std::string> lines;
};

Output pk_check(const std::string& args)
{
  std::string cmd = std::string(PK_CHECK_BIN) + " " + args + " 2>/dev/null";
  Output o;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return o;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, f)) o.out.append(buf, n);
  int status = pclose(f);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::istringstream in(o.out);
  for (std::string line; std::getline(in, line);) o.lines.push_back(line);
  return o;
}

fs::path scratch(const std::string& name)
{
  fs::path p = fs::temp_directory_path() / ("pk_cli_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string corpus_file(const std::string& name)
{
  return std::string(PK_CORPUS_DIR) + "/" + name;
}

TEST(Cli, InvalidCounterExample)
{
  auto o = pk_check(testing::data_path("inc_lt2.lus"));
  EXPECT_EQ(o.code, kExitInvalid);
  ASSERT_EQ(o.lines.size(), 4u) << o.out;
  EXPECT_EQ(o.lines[0], "INVALID k=2");
  EXPECT_EQ(o.lines[1].rfind("step 0:", 0), 0u);
  EXPECT_EQ(o.lines[3].rfind("step 2:", 0), 0u);
}

TEST(Cli, ValidAndUnknownExitCodes)
{
  auto v = pk_check("--mode k-induct " + corpus_file("v0_ctr3_le3.lus"));
  EXPECT_EQ(v.code, kExitValid);
  ASSERT_FALSE(v.lines.empty());
  EXPECT_EQ(v.lines[0], "VALID k=0 invariants=0");
  auto u = pk_check("--mode k-induct --max-k 4 " + corpus_file("n1_nonneg.lus"));
  EXPECT_EQ(u.code, kExitUnknown);
  EXPECT_EQ(u.lines.at(0), "UNKNOWN reason=max-k");
}

TEST(Cli, FrontendAndUsageErrors)
{
  EXPECT_EQ(pk_check("/nonexistent/file.lus").code, kExitFrontend);
  auto dir = scratch("frontend");
  std::ofstream(dir / "bad.lus") << "node main() returns (ok:bool);\nlet ok = ; tel\n";
  EXPECT_EQ(pk_check((dir / "bad.lus").string()).code, kExitFrontend);
  EXPECT_EQ(pk_check("--no-such-option x.lus").code, kExitUsage);
  EXPECT_EQ(pk_check("").code, kExitUsage);
  EXPECT_EQ(pk_check("--mode fast " + corpus_file("v0_ctr3_le3.lus")).code, kExitUsage);
}

TEST(Cli, SolverFailureExitCode)
{
  auto o = pk_check("--solver-cmd " + testing::fixture_path("no_push_solver.sh") + " " + corpus_file("v0_ctr3_le3.lus"));
  EXPECT_EQ(o.code, kExitSolver);
}

TEST(Cli, TsvRowAndStatsFile)
{
  auto dir = scratch("tsv");
  auto stats = dir / "stats.tsv";
  auto o = pk_check("--format tsv --mode k-induct --stats " + stats.string() + " " + corpus_file("i2_toggle.lus"));
  EXPECT_EQ(o.code, kExitInvalid);
  ASSERT_EQ(o.lines.size(), 1u);
  auto row = parse_tsv_row(o.lines[0]);
  ASSERT_TRUE(row);
  EXPECT_EQ(row->verdict, "invalid");
  EXPECT_EQ(row->k, 1);
  std::ifstream in(stats);
  auto records = read_tsv(in);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].mode, "k-induct");
}

TEST(Cli, DumpInvariants)
{
  auto dir = scratch("inv");
  auto file = dir / "inv.txt";
  auto o = pk_check("--mode no-inc-inv --dump-invariants " + file.string() + " " + corpus_file("n1_nonneg.lus"));
  EXPECT_EQ(o.code, kExitValid);
  std::ifstream in(file);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first.rfind("# ", 0), 0u) << first;
}

TEST(Cli, BenchCoversEveryFileAndMode)
{
  auto dir = scratch("bench");
  auto tsv = dir / "bench.tsv";
  auto o = pk_check("--timeout 20 --max-k 20 bench " + std::string(PK_CORPUS_DIR) +
                    " --modes k-induct,no-inc-inv,inc-inv --out " + tsv.string());
  EXPECT_EQ(o.code, 0);
  std::ifstream in(tsv);
  auto records = read_tsv(in);
  EXPECT_EQ(records.size(), testing::corpus().size() * 3);
  for (const auto& r : records) {
    auto entry = std::find_if(testing::corpus().begin(), testing::corpus().end(),
                              [&](const auto& e) { return fs::path(r.file).filename() == e.file; });
    ASSERT_NE(entry, testing::corpus().end()) << r.file;
    if (r.verdict != "unknown") EXPECT_EQ(r.verdict == "valid", entry->valid) << r.file << " " << r.mode;
  }
  auto s = pk_check("summary " + tsv.string());
  EXPECT_EQ(s.code, 0);
  ASSERT_EQ(s.lines.size(), 4u) << s.out;
  EXPECT_EQ(s.lines[0].rfind("mode", 0), 0u);
}

TEST(Cli, BenchOnEmptyDirectory)
{
  auto dir = scratch("empty");
  std::string cmd = std::string(PK_CHECK_BIN) + " bench " + dir.string() + " --out " + (dir / "o.tsv").string() + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::string out;
  char buf[1024];
  while (std::size_t n = fread(buf, 1, sizeof buf, f)) out.append(buf, n);
  EXPECT_EQ(WEXITSTATUS(pclose(f)), 0);
  EXPECT_NE(out.find("warning: no .lus files"), std::string::npos) << out;
}

TEST(Cli, RepeatedRunsAgree)
{
  for (const char* mode : {"k-induct", "inc-inv"}) {
    for (const char* file : {"v2_wrap_ne6.lus", "i4_half.lus", "n2_drift.lus"}) {
      std::string args = std::string("--format tsv --max-k 20 --mode ") + mode + " " + corpus_file(file);
      auto a = parse_tsv_row(pk_check(args).lines.at(0));
      auto b = parse_tsv_row(pk_check(args).lines.at(0));
      ASSERT_TRUE(a && b);
      EXPECT_EQ(a->verdict, b->verdict) << file << " " << mode;
    }
  }
}

TEST(Tsv, RoundTrip)
{
  BenchRecord r{"a.lus", "inc-inv", "valid", 3, 0.125, 7, 2, 4, 5};
  auto back = parse_tsv_row(to_tsv(r));
  ASSERT_TRUE(back);
  EXPECT_EQ(back->file, r.file);
  EXPECT_EQ(back->k, 3);
  EXPECT_DOUBLE_EQ(back->time_s, 0.125);
  EXPECT_EQ(back->inv_used, 2u);
  EXPECT_FALSE(parse_tsv_row(tsv_header()));
}

TEST(Summary, SolvedPercent)
{
  std::vector<BenchRecord> rs{{"a", "k-induct", "valid", 0, 1.0, 0, 0, 1, 1},
                              {"b", "k-induct", "unknown", -1, 3.0, 0, 0, 1, 1},
                              {"c", "k-induct", "invalid", 2, 2.0, 0, 0, 1, 1},
                              {"d", "k-induct", "valid", 1, 3.0, 0, 0, 1, 1}};
  auto s = summarize(rs);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_DOUBLE_EQ(s[0].solved_percent(), 75.0);
}

}  // namespace
}  // namespace pk::cli
