#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimetrics/dimetrics.h"
#include "dimetrics/generator.hpp"
#include "dimetrics/report.hpp"
#include "dimetrics/stats.hpp"

namespace fs = std::filesystem;
using namespace dimetrics;

struct dim_report {
  std::vector<report::ProjectAnalysis> projects;  // successful only, ordered by name
  std::vector<std::string> diagnostics;
  std::vector<std::string> warnings;
};

struct dim_stats {
  report::StatsRun run;
};

namespace {

thread_local std::string g_last_error;

dim_status fail(dim_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Maps exceptions escaping the core onto status codes.
template <typename F>
dim_status guarded(F&& body) {
  try {
    return body();
  } catch (const report::CsvError& e) {
    return fail(DIM_ERROR_FORMAT, e.what());
  } catch (const std::domain_error& e) {
    return fail(DIM_ERROR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DIM_ERROR_USAGE, e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(DIM_ERROR_IO, e.what());
  } catch (const std::runtime_error& e) {
    return fail(DIM_ERROR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DIM_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DIM_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(DIM_ERROR_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<report::ReportRow> rows_of(const dim_report& r) {
  std::vector<report::ReportRow> rows;
  for (const auto& p : r.projects) rows.push_back(report::make_row(p));
  return rows;
}

}  // namespace

extern "C" {

const char* dim_status_name(dim_status status) {
  switch (status) {
    case DIM_OK: return "ok";
    case DIM_ERROR_PARSE: return "parse error";
    case DIM_ERROR_USAGE: return "usage error";
    case DIM_ERROR_IO: return "i/o error";
    case DIM_ERROR_FORMAT: return "format error";
    case DIM_ERROR_DOMAIN: return "domain error";
    case DIM_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dim_last_error(void) { return g_last_error.c_str(); }

void dim_string_free(char* text) { std::free(text); }

dim_status dim_report_create(dim_report** out) {
  if (!out) return fail(DIM_ERROR_USAGE, "null output handle");
  return guarded([&] {
    *out = new dim_report();
    return DIM_OK;
  });
}

void dim_report_destroy(dim_report* report) { delete report; }

dim_status dim_report_analyze(dim_report* r, const char* const* dirs, size_t count) {
  if (!r || (!dirs && count > 0)) return fail(DIM_ERROR_USAGE, "null argument");
  return guarded([&] {
    std::vector<fs::path> paths;
    for (size_t i = 0; i < count; ++i) {
      if (!dirs[i]) return fail(DIM_ERROR_USAGE, "null directory path");
      fs::path p(dirs[i]);
      if (!fs::exists(p)) return fail(DIM_ERROR_USAGE, "no such file or directory: " + p.string());
      paths.push_back(std::move(p));
    }
    auto analyses = report::analyze_directories(paths);
    std::size_t failed = 0;
    for (auto& a : analyses) {
      for (const auto& w : a.warnings) r->warnings.push_back(w);
      if (!a.ok()) {
        ++failed;
        for (const auto& d : a.diagnostics) r->diagnostics.push_back(frontend::format_diagnostic(d));
        continue;
      }
      r->projects.push_back(std::move(a));
    }
    std::stable_sort(r->projects.begin(), r->projects.end(),
                     [](const auto& a, const auto& b) { return report::natural_less(a.name, b.name); });
    if (failed)
      return fail(DIM_ERROR_PARSE, std::to_string(failed) + " project(s) failed to parse");
    return DIM_OK;
  });
}

size_t dim_report_project_count(const dim_report* r) { return r ? r->projects.size() : 0; }

dim_status dim_report_row_at(const dim_report* r, size_t index, dim_report_row* out) {
  if (!r || !out) return fail(DIM_ERROR_USAGE, "null argument");
  if (index >= r->projects.size()) return fail(DIM_ERROR_USAGE, "row index out of range");
  const auto& a = r->projects[index];
  auto row = report::make_row(a);
  out->project = a.name.c_str();
  out->di = row.di;
  out->cbo = row.cbo;
  out->dcbo = row.dcbo;
  out->lcom = row.lcom;
  out->rfc = row.rfc;
  out->loc = row.loc;
  out->ncbo = row.ncbo;
  out->ndcbo = row.ndcbo;
  out->nlcom = row.nlcom;
  out->nrfc = row.nrfc;
  out->mai = row.mai;
  out->dmai = row.dmai;
  out->class_count = a.metrics.class_metrics.size();
  return DIM_OK;
}

size_t dim_report_diagnostic_count(const dim_report* r) { return r ? r->diagnostics.size() : 0; }

const char* dim_report_diagnostic_at(const dim_report* r, size_t index) {
  return r && index < r->diagnostics.size() ? r->diagnostics[index].c_str() : nullptr;
}

size_t dim_report_warning_count(const dim_report* r) { return r ? r->warnings.size() : 0; }

const char* dim_report_warning_at(const dim_report* r, size_t index) {
  return r && index < r->warnings.size() ? r->warnings[index].c_str() : nullptr;
}

dim_status dim_report_render(const dim_report* r, dim_format format, char** out_text) {
  if (!r || !out_text) return fail(DIM_ERROR_USAGE, "null argument");
  return guarded([&] {
    std::string text;
    if (format == DIM_FORMAT_CSV) {
      text = report::render_csv(rows_of(*r));
    } else if (format == DIM_FORMAT_JSON) {
      text = report::render_json(r->projects);
    } else {
      return fail(DIM_ERROR_USAGE, "unknown report format");
    }
    *out_text = duplicate(text);
    return DIM_OK;
  });
}

dim_status dim_generate_suite(const char* output_root, int step, size_t* out_project_count) {
  if (!output_root) return fail(DIM_ERROR_USAGE, "null output root");
  return guarded([&] {
    auto dirs = generator::generate_suite(output_root, step);
    if (out_project_count) *out_project_count = dirs.size();
    return DIM_OK;
  });
}

dim_status dim_stats_run_csv(const char* report_csv, double threshold, dim_boundary boundary, dim_metric metric,
                             double alpha, dim_stats** out) {
  if (!report_csv || !out) return fail(DIM_ERROR_USAGE, "null argument");
  if (!(alpha > 0.0 && alpha < 1.0)) return fail(DIM_ERROR_USAGE, "alpha must lie in (0, 1)");
  stats::Boundary b;
  switch (boundary) {
    case DIM_BOUNDARY_EXCLUDE: b = stats::Boundary::exclude; break;
    case DIM_BOUNDARY_LOWER: b = stats::Boundary::lower; break;
    case DIM_BOUNDARY_UPPER: b = stats::Boundary::upper; break;
    default: return fail(DIM_ERROR_USAGE, "unknown boundary rule");
  }
  if (metric != DIM_METRIC_MAI && metric != DIM_METRIC_DMAI) return fail(DIM_ERROR_USAGE, "unknown metric");
  return guarded([&] {
    auto rows = report::parse_csv(report_csv);
    auto handle = std::make_unique<dim_stats>();
    handle->run = report::run_stats(rows, threshold, b,
                                    metric == DIM_METRIC_MAI ? report::Metric::mai : report::Metric::dmai, alpha);
    *out = handle.release();
    return DIM_OK;
  });
}

void dim_stats_destroy(dim_stats* s) { delete s; }

double dim_stats_chi_square(const dim_stats* s) { return s ? s->run.result.chi_square : 0.0; }
int dim_stats_df(const dim_stats* s) { return s ? s->run.result.df : 0; }
double dim_stats_p_value(const dim_stats* s) { return s ? s->run.result.p_value : 1.0; }
int dim_stats_rejected(const dim_stats* s) { return s && s->run.result.rejected ? 1 : 0; }
size_t dim_stats_block_count(const dim_stats* s) { return s ? s->run.matrix.blocks() : 0; }
size_t dim_stats_treatment_count(const dim_stats* s) { return s ? s->run.matrix.treatments.size() : 0; }

const char* dim_stats_treatment_name(const dim_stats* s, size_t index) {
  return s && index < s->run.matrix.treatments.size() ? s->run.matrix.treatments[index].c_str() : nullptr;
}

double dim_stats_mean_rank(const dim_stats* s, size_t index) {
  return s && index < s->run.result.mean_ranks.size() ? s->run.result.mean_ranks[index] : 0.0;
}

size_t dim_stats_pairwise_count(const dim_stats* s) { return s ? s->run.result.pairwise.size() : 0; }

dim_status dim_stats_pairwise_at(const dim_stats* s, size_t index, dim_pairwise* out) {
  if (!s || !out) return fail(DIM_ERROR_USAGE, "null argument");
  if (index >= s->run.result.pairwise.size()) return fail(DIM_ERROR_USAGE, "pairwise index out of range");
  const auto& c = s->run.result.pairwise[index];
  *out = dim_pairwise{c.first, c.second, c.z, c.p_raw, c.p_holm, c.rejected ? 1 : 0};
  return DIM_OK;
}

size_t dim_stats_warning_count(const dim_stats* s) { return s ? s->run.warnings.size() : 0; }

const char* dim_stats_warning_at(const dim_stats* s, size_t index) {
  return s && index < s->run.warnings.size() ? s->run.warnings[index].c_str() : nullptr;
}

dim_status dim_stats_render(const dim_stats* s, char** out_text) {
  if (!s || !out_text) return fail(DIM_ERROR_USAGE, "null argument");
  return guarded([&] {
    *out_text = duplicate(report::render_stats(s->run));
    return DIM_OK;
  });
}

dim_status dim_chi_square_upper_tail(double x, int df, double* out) {
  if (!out) return fail(DIM_ERROR_USAGE, "null argument");
  return guarded([&] {
    *out = stats::chi_square_upper_tail(x, df);
    return DIM_OK;
  });
}

dim_status dim_chart_svg_from_csv(const char* report_csv, char** out_svg) {
  if (!report_csv || !out_svg) return fail(DIM_ERROR_USAGE, "null argument");
  return guarded([&] {
    auto rows = report::parse_csv(report_csv);
    *out_svg = duplicate(report::render_chart(rows));
    return DIM_OK;
  });
}

}  // extern "C"
