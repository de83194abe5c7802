// Exercises the shared library through the C header only.
#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>
#include <string>
#include <vector>

#include "dimetrics/dimetrics.h"

namespace fs = std::filesystem;

namespace {

class Scratch {
 public:
  Scratch() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("dimetrics-capi-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string take(char* text) {
  std::string s(text ? text : "");
  dim_string_free(text);
  return s;
}

std::vector<std::string> suite_dirs(const fs::path& root) {
  std::vector<std::string> dirs;
  for (int pct = 0; pct <= 100; pct += 10) dirs.push_back((root / ("di_" + std::to_string(pct))).string());
  return dirs;
}

std::string suite_csv(const fs::path& root) {
  size_t count = 0;
  EXPECT_EQ(dim_generate_suite(root.c_str(), 10, &count), DIM_OK);
  auto dirs = suite_dirs(root);
  std::vector<const char*> argv;
  for (const auto& d : dirs) argv.push_back(d.c_str());
  dim_report* report = nullptr;
  EXPECT_EQ(dim_report_create(&report), DIM_OK);
  EXPECT_EQ(dim_report_analyze(report, argv.data(), argv.size()), DIM_OK);
  char* csv = nullptr;
  EXPECT_EQ(dim_report_render(report, DIM_FORMAT_CSV, &csv), DIM_OK);
  dim_report_destroy(report);
  return take(csv);
}

TEST(CApi, StatusNames) {
  EXPECT_STREQ(dim_status_name(DIM_OK), "ok");
  EXPECT_STREQ(dim_status_name(DIM_ERROR_FORMAT), "format error");
  EXPECT_NE(dim_status_name(static_cast<dim_status>(99)), nullptr);
}

TEST(CApi, GenerateAndAnalyzeSuite) {
  Scratch tmp;
  size_t count = 0;
  ASSERT_EQ(dim_generate_suite(tmp.path().c_str(), 10, &count), DIM_OK);
  EXPECT_EQ(count, 11u);

  auto dirs = suite_dirs(tmp.path());
  std::vector<const char*> argv;
  for (auto it = dirs.rbegin(); it != dirs.rend(); ++it) argv.push_back(it->c_str());
  dim_report* report = nullptr;
  ASSERT_EQ(dim_report_create(&report), DIM_OK);
  ASSERT_EQ(dim_report_analyze(report, argv.data(), argv.size()), DIM_OK);
  ASSERT_EQ(dim_report_project_count(report), 11u);
  EXPECT_EQ(dim_report_diagnostic_count(report), 0u);
  EXPECT_EQ(dim_report_warning_count(report), 0u);

  for (size_t k = 0; k <= 10; ++k) {
    dim_report_row row;
    ASSERT_EQ(dim_report_row_at(report, k, &row), DIM_OK);
    EXPECT_EQ(std::string(row.project), "di_" + std::to_string(k * 10));
    EXPECT_DOUBLE_EQ(row.di, k / 10.0);
    EXPECT_DOUBLE_EQ(row.dcbo, (20.0 - k) / 11.0);
    EXPECT_EQ(row.loc, 108 - 2 * k);
    EXPECT_EQ(row.class_count, 11u);
  }
  dim_report_row row;
  EXPECT_EQ(dim_report_row_at(report, 11, &row), DIM_ERROR_USAGE);
  EXPECT_NE(std::string(dim_last_error()).find("range"), std::string::npos);

  char* json = nullptr;
  ASSERT_EQ(dim_report_render(report, DIM_FORMAT_JSON, &json), DIM_OK);
  EXPECT_NE(take(json).find("\"projects\""), std::string::npos);
  char* bogus = nullptr;
  EXPECT_EQ(dim_report_render(report, static_cast<dim_format>(7), &bogus), DIM_ERROR_USAGE);
  dim_report_destroy(report);
}

TEST(CApi, AnalyzeReportsParseFailuresAndKeepsGoodProjects) {
  Scratch tmp;
  fs::create_directories(tmp.path() / "good");
  fs::create_directories(tmp.path() / "bad");
  std::ofstream(tmp.path() / "good" / "A.java") << "class A { B b; }\n";
  std::ofstream(tmp.path() / "good" / "B.java") << "class B { }\n";
  std::ofstream(tmp.path() / "bad" / "C.java") << "class C { void f() { for (;;) { } } }\n";
  std::string good = (tmp.path() / "good").string(), bad = (tmp.path() / "bad").string();
  const char* argv[] = {good.c_str(), bad.c_str()};

  dim_report* report = nullptr;
  ASSERT_EQ(dim_report_create(&report), DIM_OK);
  EXPECT_EQ(dim_report_analyze(report, argv, 2), DIM_ERROR_PARSE);
  EXPECT_EQ(dim_report_project_count(report), 1u);
  ASSERT_EQ(dim_report_diagnostic_count(report), 1u);
  std::string diag = dim_report_diagnostic_at(report, 0);
  EXPECT_NE(diag.find("C.java:1:"), std::string::npos);
  EXPECT_NE(diag.find("error: unsupported construct 'for'"), std::string::npos);
  EXPECT_EQ(dim_report_diagnostic_at(report, 5), nullptr);
  dim_report_destroy(report);
}

TEST(CApi, EmptyProjectWarning) {
  Scratch tmp;
  fs::create_directories(tmp.path() / "empty");
  std::string dir = (tmp.path() / "empty").string();
  const char* argv[] = {dir.c_str()};
  dim_report* report = nullptr;
  ASSERT_EQ(dim_report_create(&report), DIM_OK);
  EXPECT_EQ(dim_report_analyze(report, argv, 1), DIM_OK);
  EXPECT_EQ(dim_report_project_count(report), 1u);
  ASSERT_EQ(dim_report_warning_count(report), 1u);
  EXPECT_NE(dim_report_warning_at(report, 0), nullptr);
  EXPECT_EQ(dim_report_warning_at(report, 1), nullptr);
  dim_report_destroy(report);
}

TEST(CApi, UsageErrors) {
  EXPECT_EQ(dim_report_create(nullptr), DIM_ERROR_USAGE);
  dim_report* report = nullptr;
  ASSERT_EQ(dim_report_create(&report), DIM_OK);
  const char* missing[] = {"/nonexistent/dimetrics/path"};
  EXPECT_EQ(dim_report_analyze(report, missing, 1), DIM_ERROR_USAGE);
  EXPECT_NE(std::string(dim_last_error()).find("/nonexistent/dimetrics/path"), std::string::npos);
  EXPECT_EQ(dim_report_analyze(nullptr, missing, 1), DIM_ERROR_USAGE);
  dim_report_destroy(report);
  dim_report_destroy(nullptr);

  Scratch tmp;
  size_t count = 99;
  EXPECT_EQ(dim_generate_suite(tmp.path().c_str(), 25, &count), DIM_ERROR_USAGE);
  EXPECT_NE(std::string(dim_last_error()).find("25"), std::string::npos);
  EXPECT_EQ(dim_generate_suite(nullptr, 10, &count), DIM_ERROR_USAGE);
}

TEST(CApi, GenerateIntoUnwritableRootIsIoError) {
  Scratch tmp;
  std::ofstream(tmp.path() / "file") << "x";
  size_t count = 0;
  EXPECT_EQ(dim_generate_suite((tmp.path() / "file").c_str(), 10, &count), DIM_ERROR_IO);
}

TEST(CApi, StatsOnSuite) {
  Scratch tmp;
  std::string csv = suite_csv(tmp.path());
  dim_stats* stats = nullptr;
  ASSERT_EQ(dim_stats_run_csv(csv.c_str(), 0.5, DIM_BOUNDARY_EXCLUDE, DIM_METRIC_DMAI, 0.05, &stats), DIM_OK);
  EXPECT_NEAR(dim_stats_chi_square(stats), 5.0, 1e-12);
  EXPECT_EQ(dim_stats_df(stats), 1);
  EXPECT_NEAR(dim_stats_p_value(stats), 0.0253473186774683, 1e-12);
  EXPECT_EQ(dim_stats_rejected(stats), 1);
  EXPECT_EQ(dim_stats_block_count(stats), 5u);
  ASSERT_EQ(dim_stats_treatment_count(stats), 2u);
  EXPECT_STREQ(dim_stats_treatment_name(stats, 0), "No DI");
  EXPECT_STREQ(dim_stats_treatment_name(stats, 1), "DI");
  EXPECT_EQ(dim_stats_treatment_name(stats, 2), nullptr);
  EXPECT_EQ(dim_stats_mean_rank(stats, 0), 1.0);
  EXPECT_EQ(dim_stats_mean_rank(stats, 1), 2.0);
  ASSERT_EQ(dim_stats_pairwise_count(stats), 1u);
  dim_pairwise pw;
  ASSERT_EQ(dim_stats_pairwise_at(stats, 0, &pw), DIM_OK);
  EXPECT_EQ(pw.first, 0u);
  EXPECT_EQ(pw.second, 1u);
  EXPECT_EQ(pw.rejected, 1);
  EXPECT_EQ(dim_stats_pairwise_at(stats, 1, &pw), DIM_ERROR_USAGE);
  EXPECT_EQ(dim_stats_warning_count(stats), 0u);
  EXPECT_EQ(dim_stats_warning_at(stats, 0), nullptr);
  char* text = nullptr;
  ASSERT_EQ(dim_stats_render(stats, &text), DIM_OK);
  EXPECT_NE(take(text).find("decision: reject"), std::string::npos);
  dim_stats_destroy(stats);

  ASSERT_EQ(dim_stats_run_csv(csv.c_str(), 0.5, DIM_BOUNDARY_LOWER, DIM_METRIC_MAI, 0.05, &stats), DIM_OK);
  EXPECT_EQ(dim_stats_warning_count(stats), 1u);
  dim_stats_destroy(stats);
  dim_stats_destroy(nullptr);
}

TEST(CApi, StatsErrors) {
  dim_stats* stats = nullptr;
  std::string header = "project,di,cbo,dcbo,lcom,rfc,loc,ncbo,ndcbo,nlcom,nrfc,mai,dmai\n";
  EXPECT_EQ(dim_stats_run_csv("nope\n", 0.5, DIM_BOUNDARY_EXCLUDE, DIM_METRIC_DMAI, 0.05, &stats), DIM_ERROR_FORMAT);
  EXPECT_EQ(std::string(dim_last_error()).rfind("line 1:", 0), 0u);
  std::string one_group = header + "a,0.1,1,1,0,1,1,0.5,0.5,0,0.5,0.6,0.6\nb,0.2,1,1,0,1,1,0.5,0.5,0,0.5,0.6,0.6\n";
  EXPECT_EQ(dim_stats_run_csv(one_group.c_str(), 0.5, DIM_BOUNDARY_EXCLUDE, DIM_METRIC_DMAI, 0.05, &stats),
            DIM_ERROR_DOMAIN);
  EXPECT_EQ(dim_stats_run_csv(header.c_str(), 0.5, DIM_BOUNDARY_EXCLUDE, DIM_METRIC_DMAI, 1.5, &stats),
            DIM_ERROR_USAGE);
  EXPECT_EQ(dim_stats_run_csv(header.c_str(), 0.5, static_cast<dim_boundary>(9), DIM_METRIC_DMAI, 0.05, &stats),
            DIM_ERROR_USAGE);
  EXPECT_EQ(dim_stats_run_csv(nullptr, 0.5, DIM_BOUNDARY_EXCLUDE, DIM_METRIC_DMAI, 0.05, &stats), DIM_ERROR_USAGE);
}

TEST(CApi, ChiSquareTail) {
  double p = 0;
  ASSERT_EQ(dim_chi_square_upper_tail(3.841, 1, &p), DIM_OK);
  EXPECT_NEAR(p, 0.0500136837639567, 1e-12);
  EXPECT_EQ(dim_chi_square_upper_tail(1.0, 0, &p), DIM_ERROR_USAGE);
  EXPECT_EQ(dim_chi_square_upper_tail(-1.0, 1, &p), DIM_ERROR_USAGE);
  EXPECT_EQ(dim_chi_square_upper_tail(1.0, 1, nullptr), DIM_ERROR_USAGE);
}

TEST(CApi, ChartFromCsv) {
  Scratch tmp;
  std::string csv = suite_csv(tmp.path());
  char* svg = nullptr;
  ASSERT_EQ(dim_chart_svg_from_csv(csv.c_str(), &svg), DIM_OK);
  std::string text = take(svg);
  EXPECT_EQ(text.rfind("<svg", 0), 0u);
  EXPECT_EQ(dim_chart_svg_from_csv("garbage", &svg), DIM_ERROR_FORMAT);
}

TEST(CApi, LastErrorIsPerThread) {
  double p = 0;
  EXPECT_EQ(dim_chi_square_upper_tail(1.0, 0, &p), DIM_ERROR_USAGE);
  std::string here = dim_last_error();
  std::string there;
  std::thread([&] { there = dim_last_error(); }).join();
  EXPECT_FALSE(here.empty());
  EXPECT_TRUE(there.empty());
}

}  // namespace
