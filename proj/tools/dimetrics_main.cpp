// Command-line front end over the dimetrics C API.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dimetrics/dimetrics.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int exit_code_for(dim_status status) {
  switch (status) {
    case DIM_OK: return kExitOk;
    case DIM_ERROR_USAGE: return kExitUsage;
    default: return kExitFailure;
  }
}

int report_error(dim_status status) {
  std::cerr << "dimetrics: " << dim_status_name(status) << ": " << dim_last_error() << "\n";
  return exit_code_for(status);
}

struct StringDeleter {
  void operator()(char* p) const { dim_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

int cmd_analyze(const std::vector<std::string>& paths, const std::string& format, const std::string& out_path) {
  dim_report* raw = nullptr;
  if (auto s = dim_report_create(&raw); s != DIM_OK) return report_error(s);
  std::unique_ptr<dim_report, decltype(&dim_report_destroy)> report(raw, &dim_report_destroy);

  std::vector<const char*> dirs;
  for (const auto& p : paths) dirs.push_back(p.c_str());
  dim_status analyzed = dim_report_analyze(report.get(), dirs.data(), dirs.size());
  if (analyzed != DIM_OK && analyzed != DIM_ERROR_PARSE) return report_error(analyzed);

  for (size_t i = 0; i < dim_report_warning_count(report.get()); ++i)
    std::cerr << "warning: " << dim_report_warning_at(report.get(), i) << "\n";
  for (size_t i = 0; i < dim_report_diagnostic_count(report.get()); ++i)
    std::cerr << dim_report_diagnostic_at(report.get(), i) << "\n";

  char* text = nullptr;
  dim_format fmt = format == "json" ? DIM_FORMAT_JSON : DIM_FORMAT_CSV;
  if (auto s = dim_report_render(report.get(), fmt, &text); s != DIM_OK) return report_error(s);
  OwnedString owned(text);
  if (!write_output(out_path, owned.get())) {
    std::cerr << "dimetrics: cannot write " << out_path << "\n";
    return kExitFailure;
  }
  return analyzed == DIM_OK ? kExitOk : kExitFailure;
}

int cmd_generate(const std::string& root, int step) {
  size_t count = 0;
  if (auto s = dim_generate_suite(root.c_str(), step, &count); s != DIM_OK) return report_error(s);
  std::cerr << "generated " << count << " projects under " << root << "\n";
  return kExitOk;
}

int cmd_stats(const std::string& csv_path, double threshold, dim_boundary boundary, dim_metric metric, double alpha) {
  std::string csv;
  if (!read_file(csv_path, csv)) {
    std::cerr << "dimetrics: cannot read " << csv_path << "\n";
    return kExitFailure;
  }
  dim_stats* raw = nullptr;
  if (auto s = dim_stats_run_csv(csv.c_str(), threshold, boundary, metric, alpha, &raw); s != DIM_OK)
    return report_error(s);
  std::unique_ptr<dim_stats, decltype(&dim_stats_destroy)> stats(raw, &dim_stats_destroy);
  for (size_t i = 0; i < dim_stats_warning_count(stats.get()); ++i)
    std::cerr << "warning: " << dim_stats_warning_at(stats.get(), i) << "\n";
  char* text = nullptr;
  if (auto s = dim_stats_render(stats.get(), &text); s != DIM_OK) return report_error(s);
  OwnedString owned(text);
  std::cout << owned.get();
  return kExitOk;
}

int cmd_chart(const std::string& csv_path, const std::string& out_path) {
  std::string csv;
  if (!read_file(csv_path, csv)) {
    std::cerr << "dimetrics: cannot read " << csv_path << "\n";
    return kExitFailure;
  }
  char* svg = nullptr;
  if (auto s = dim_chart_svg_from_csv(csv.c_str(), &svg); s != DIM_OK) return report_error(s);
  OwnedString owned(svg);
  if (!write_output(out_path, owned.get())) {
    std::cerr << "dimetrics: cannot write " << out_path << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measure dependency injection, coupling and maintainability of class-based projects"};
  app.require_subcommand(1);

  std::vector<std::string> analyze_paths;
  std::string format = "csv";
  std::string out_path;
  auto* analyze = app.add_subcommand("analyze", "Analyze project directories and print a metrics report");
  analyze->add_option("paths", analyze_paths, "Project directories (one report row each)")->required();
  analyze->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  analyze->add_option("--out", out_path, "Output file (default stdout)");

  std::string generate_root;
  int step = 10;
  auto* generate = app.add_subcommand("generate", "Generate the di_0 ... di_100 experiment projects");
  generate->add_option("output_root", generate_root, "Directory receiving the projects")->required();
  generate->add_option("--step", step, "Injected percentage step");

  std::string stats_csv;
  double threshold = 0.5;
  double alpha = 0.05;
  dim_boundary boundary = DIM_BOUNDARY_EXCLUDE;
  dim_metric metric = DIM_METRIC_DMAI;
  const std::map<std::string, dim_boundary> boundaries{
      {"exclude", DIM_BOUNDARY_EXCLUDE}, {"lower", DIM_BOUNDARY_LOWER}, {"upper", DIM_BOUNDARY_UPPER}};
  const std::map<std::string, dim_metric> metrics{{"mai", DIM_METRIC_MAI}, {"dmai", DIM_METRIC_DMAI}};
  auto* stats = app.add_subcommand("stats", "Friedman test with Holm correction over a report CSV");
  stats->add_option("report", stats_csv, "Report CSV produced by analyze")->required();
  stats->add_option("--threshold", threshold, "DI proportion splitting 'No DI' from 'DI'");
  stats->add_option("--boundary", boundary, "Where projects equal to the threshold go")
      ->transform(CLI::CheckedTransformer(boundaries, CLI::ignore_case));
  stats->add_option("--metric", metric, "Score compared across groups")
      ->transform(CLI::CheckedTransformer(metrics, CLI::ignore_case));
  stats->add_option("--alpha", alpha, "Significance level");

  std::string chart_csv;
  std::string chart_out;
  auto* chart = app.add_subcommand("chart", "Render an SVG trendline chart from a report CSV");
  chart->add_option("report", chart_csv, "Report CSV produced by analyze")->required();
  chart->add_option("--out", chart_out, "Output SVG file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (analyze->parsed()) return cmd_analyze(analyze_paths, format, out_path);
  if (generate->parsed()) return cmd_generate(generate_root, step);
  if (stats->parsed()) return cmd_stats(stats_csv, threshold, boundary, metric, alpha);
  if (chart->parsed()) return cmd_chart(chart_csv, chart_out);
  return kExitUsage;
}
