#include <cstdio>

#include "dimetrics/report.hpp"

namespace dimetrics::report {

std::string_view to_string(Metric m) { return m == Metric::mai ? "MAI" : "DMAI"; }

StatsRun run_stats(std::span<const ReportRow> rows, double threshold, stats::Boundary boundary, Metric metric,
                   double alpha) {
  StatsRun run;
  run.metric = metric;
  run.threshold = threshold;
  run.boundary = boundary;
  run.alpha = alpha;
  std::vector<stats::Observation> obs;
  for (const auto& r : rows) obs.push_back({r.di, metric == Metric::mai ? r.mai : r.dmai});
  run.matrix = stats::split_by_threshold(obs, threshold, boundary, &run.warnings);
  run.result = stats::friedman_test(run.matrix, alpha);
  return run;
}

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string_view boundary_name(stats::Boundary b) {
  switch (b) {
    case stats::Boundary::exclude: return "exclude";
    case stats::Boundary::lower: return "lower";
    case stats::Boundary::upper: return "upper";
  }
  return "exclude";
}

}  // namespace

std::string render_stats(const StatsRun& run) {
  const auto& r = run.result;
  const auto& names = run.matrix.treatments;
  const std::string metric(to_string(run.metric));
  std::string out;
  out += "metric: " + metric + "\n";
  out += "threshold: " + fmt("%g", run.threshold) + " (boundary " + std::string(boundary_name(run.boundary)) + ")\n";
  out += "blocks: " + std::to_string(run.matrix.blocks()) + ", treatments: " + std::to_string(names.size()) + "\n";
  out += "friedman chi-square: " + fmt("%.6f", r.chi_square) + ", df: " + std::to_string(r.df) +
         ", p-value: " + fmt("%.6f", r.p_value) + "\n";
  out += "mean ranks:";
  for (std::size_t j = 0; j < names.size(); ++j) out += " \"" + names[j] + "\"=" + fmt("%.4f", r.mean_ranks[j]);
  out += "\n";
  out += "holm table (alpha = " + fmt("%g", run.alpha) + "):\n";
  for (const auto& c : r.pairwise) {
    out += "  \"" + names[c.first] + "\" " + metric + " vs. \"" + names[c.second] + "\" " + metric +
           "  z=" + fmt("%.4f", c.z) + "  p=" + fmt("%.6f", c.p_raw) + "  holm=" + fmt("%.6f", c.p_holm) + "  " +
           (c.rejected ? "reject" : "retain") + "\n";
  }
  out += std::string("decision: ") + (r.rejected ? "reject" : "retain") + "\n";
  return out;
}

}  // namespace dimetrics::report
