#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dimetrics/di.hpp"
#include "dimetrics/frontend.hpp"
#include "dimetrics/maintainability.hpp"
#include "dimetrics/metrics.hpp"
#include "dimetrics/stats.hpp"

namespace dimetrics::report {

/// Full pipeline output for one project directory.
struct ProjectAnalysis {
  std::string name;
  frontend::ProjectModel project;
  metrics::CouplingGraph graph;
  di::DiSummary di;
  metrics::ProjectMetrics metrics;
  maintainability::MaintainabilityScores scores;
  std::vector<frontend::Diagnostic> diagnostics;
  std::vector<std::string> warnings;

  bool ok() const { return diagnostics.empty(); }
};

/// Parses, resolves and measures the given files as one project. On any diagnostic
/// the returned analysis carries diagnostics and no metrics.
ProjectAnalysis analyze_sources(std::string name, const std::vector<std::shared_ptr<const frontend::SourceFile>>& files);

/// Reads every `.java` file under dir; the project is named after the directory.
ProjectAnalysis analyze_directory(const std::filesystem::path& dir);

/// Analyzes directories concurrently; results ordered by project name.
std::vector<ProjectAnalysis> analyze_directories(std::span<const std::filesystem::path> dirs);

std::string project_name_for(const std::filesystem::path& dir);

/// Name ordering that compares digit runs numerically (di_2 < di_10).
bool natural_less(std::string_view a, std::string_view b);

struct ReportRow {
  std::string project;
  double di = 0, cbo = 0, dcbo = 0, lcom = 0, rfc = 0;
  std::size_t loc = 0;
  double ncbo = 0, ndcbo = 0, nlcom = 0, nrfc = 0, mai = 0, dmai = 0;
};

inline constexpr std::string_view kCsvHeader = "project,di,cbo,dcbo,lcom,rfc,loc,ncbo,ndcbo,nlcom,nrfc,mai,dmai";

ReportRow make_row(const ProjectAnalysis& analysis);

/// Half-up rounding to `decimals` places, rendered with exactly that many digits.
std::string format_fixed(double value, int decimals = 2);

/// Display cells of a row in CSV column order.
std::vector<std::string> display_cells(const ReportRow& row);

std::string render_csv(std::span<const ReportRow> rows);
std::string render_json(std::span<const ProjectAnalysis> analyses);

class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads a report produced by render_csv. Throws CsvError with the offending line.
std::vector<ReportRow> parse_csv(std::string_view text);

/// Self-contained SVG of NCBO, NDCBO, MAI and DMAI against DI with least-squares trendlines.
std::string render_chart(std::span<const ReportRow> rows);

enum class Metric { mai, dmai };

std::string_view to_string(Metric m);

struct StatsRun {
  Metric metric = Metric::dmai;
  double threshold = 0.5;
  stats::Boundary boundary = stats::Boundary::exclude;
  double alpha = 0.05;
  stats::RankMatrix matrix;
  stats::FriedmanResult result;
  std::vector<std::string> warnings;
};

/// Splits report rows at the threshold and runs the Friedman test on the chosen score.
StatsRun run_stats(std::span<const ReportRow> rows, double threshold, stats::Boundary boundary, Metric metric,
                   double alpha);

std::string render_stats(const StatsRun& run);

}  // namespace dimetrics::report
