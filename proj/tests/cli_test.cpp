#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "test_support.hpp"

using dimetrics::test::TempDir;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

RunResult run(const std::vector<std::string>& args, const fs::path& scratch) {
  std::string cmd = quote(DIMETRICS_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  fs::path out = scratch / "stdout.txt", err = scratch / "stderr.txt";
  cmd += " >" + quote(out.string()) + " 2>" + quote(err.string());
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

class Cli : public ::testing::Test {
 protected:
  TempDir tmp;
  fs::path suite() const { return tmp.path() / "suite"; }

  std::vector<std::string> suite_dirs() const {
    std::vector<std::string> dirs;
    for (int pct = 0; pct <= 100; pct += 10) dirs.push_back((suite() / ("di_" + std::to_string(pct))).string());
    return dirs;
  }

  fs::path write_report() {
    EXPECT_EQ(run({"generate", suite().string()}, tmp.path()).exit_code, 0);
    fs::path csv = tmp.path() / "report.csv";
    auto args = suite_dirs();
    args.insert(args.begin(), {"analyze", "--out", csv.string()});
    EXPECT_EQ(run(args, tmp.path()).exit_code, 0);
    return csv;
  }
};

TEST_F(Cli, GenerateAnalyzeStatsChart) {
  auto csv = write_report();
  auto text = slurp(csv);
  EXPECT_EQ(text.rfind("project,di,cbo,dcbo,lcom,rfc,loc,ncbo,ndcbo,nlcom,nrfc,mai,dmai\n", 0), 0u);
  EXPECT_NE(text.find("di_50,0.50,1.82,1.36,0.00,2.45,98,"), std::string::npos);

  auto stats = run({"stats", csv.string()}, tmp.path());
  EXPECT_EQ(stats.exit_code, 0);
  EXPECT_NE(stats.out.find("p-value: 0.025347"), std::string::npos);
  EXPECT_NE(stats.out.find("decision: reject"), std::string::npos);

  auto chart = run({"chart", csv.string(), "--out", (tmp.path() / "chart.svg").string()}, tmp.path());
  EXPECT_EQ(chart.exit_code, 0);
  EXPECT_EQ(slurp(tmp.path() / "chart.svg").rfind("<svg", 0), 0u);
}

TEST_F(Cli, AnalyzeJsonToStdout) {
  ASSERT_EQ(run({"generate", suite().string(), "--step", "100"}, tmp.path()).exit_code, 0);
  auto r = run({"analyze", "--format", "json", (suite() / "di_100").string()}, tmp.path());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"project\": \"di_100\""), std::string::npos);
}

TEST_F(Cli, UnparsableProjectIsReportedAndSkipped) {
  ASSERT_EQ(run({"generate", suite().string(), "--step", "100"}, tmp.path()).exit_code, 0);
  fs::create_directories(tmp.path() / "broken");
  std::ofstream(tmp.path() / "broken" / "X.java") << "class X {\n  void f() { int[] a = {1}; }\n}\n";
  auto r = run({"analyze", (suite() / "di_0").string(), (tmp.path() / "broken").string()}, tmp.path());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("X.java:2:"), std::string::npos);
  EXPECT_NE(r.out.find("di_0,"), std::string::npos);
  EXPECT_EQ(r.out.find("broken"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({"generate", suite().string(), "--step", "25"}, tmp.path()).exit_code, 2);
  EXPECT_EQ(run({"generate", suite().string(), "--step", "ten"}, tmp.path()).exit_code, 2);
  EXPECT_EQ(run({"analyze", (tmp.path() / "missing").string()}, tmp.path()).exit_code, 2);
  EXPECT_EQ(run({"analyze", "--format", "xml", tmp.path().string()}, tmp.path()).exit_code, 2);
  EXPECT_EQ(run({}, tmp.path()).exit_code, 2);
  EXPECT_EQ(run({"frobnicate"}, tmp.path()).exit_code, 2);
  EXPECT_EQ(run({"--help"}, tmp.path()).exit_code, 0);
}

TEST_F(Cli, StatsFailures) {
  fs::path one_group = tmp.path() / "one.csv";
  std::ofstream(one_group) << "project,di,cbo,dcbo,lcom,rfc,loc,ncbo,ndcbo,nlcom,nrfc,mai,dmai\n"
                              "a,0.10,1,1,0,1,1,0.5,0.5,0,0.5,0.6,0.6\n"
                              "b,0.20,1,1,0,1,1,0.5,0.5,0,0.5,0.6,0.6\n";
  auto r = run({"stats", one_group.string()}, tmp.path());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("0.5"), std::string::npos);

  fs::path malformed = tmp.path() / "bad.csv";
  std::ofstream(malformed) << "project,di,cbo,dcbo,lcom,rfc,loc,ncbo,ndcbo,nlcom,nrfc,mai,dmai\na,b\n";
  r = run({"stats", malformed.string()}, tmp.path());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);

  EXPECT_EQ(run({"stats", (tmp.path() / "none.csv").string()}, tmp.path()).exit_code, 1);
  EXPECT_EQ(run({"stats", one_group.string(), "--boundary", "middle"}, tmp.path()).exit_code, 2);
  EXPECT_EQ(run({"chart", malformed.string()}, tmp.path()).exit_code, 1);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  auto csv = write_report();
  auto first = slurp(csv);
  auto args = suite_dirs();
  args.insert(args.begin(), "analyze");
  EXPECT_EQ(run(args, tmp.path()).out, first);
}

}  // namespace
