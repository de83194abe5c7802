/*
 * dimetrics C API.
 *
 * Every function returns a dim_status; on failure a message describing the
 * error is available from dim_last_error() on the calling thread until the
 * next failing call on that thread. Handles are opaque and owned by the
 * caller once created; strings returned through char** are heap-allocated
 * and must be released with dim_string_free().
 */
#ifndef DIMETRICS_DIMETRICS_H_
#define DIMETRICS_DIMETRICS_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(DIMETRICS_BUILDING)
#define DIM_API __declspec(dllexport)
#else
#define DIM_API __declspec(dllimport)
#endif
#else
#define DIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dim_status {
  DIM_OK = 0,
  DIM_ERROR_PARSE = 1,    /* source files violate the accepted grammar */
  DIM_ERROR_USAGE = 2,    /* invalid argument (bad step, missing path, null handle) */
  DIM_ERROR_IO = 3,       /* file system failure */
  DIM_ERROR_FORMAT = 4,   /* malformed report CSV */
  DIM_ERROR_DOMAIN = 5,   /* statistical precondition failed (e.g. empty group) */
  DIM_ERROR_INTERNAL = 6
} dim_status;

typedef enum dim_format { DIM_FORMAT_CSV = 0, DIM_FORMAT_JSON = 1 } dim_format;
typedef enum dim_boundary { DIM_BOUNDARY_EXCLUDE = 0, DIM_BOUNDARY_LOWER = 1, DIM_BOUNDARY_UPPER = 2 } dim_boundary;
typedef enum dim_metric { DIM_METRIC_MAI = 0, DIM_METRIC_DMAI = 1 } dim_metric;

DIM_API const char* dim_status_name(dim_status status);
DIM_API const char* dim_last_error(void);
DIM_API void dim_string_free(char* text);

/* ---- analysis ---------------------------------------------------------- */

typedef struct dim_report dim_report;

typedef struct dim_report_row {
  const char* project; /* valid while the owning report lives */
  double di;
  double cbo;
  double dcbo;
  double lcom;
  double rfc;
  size_t loc;
  double ncbo;
  double ndcbo;
  double nlcom;
  double nrfc;
  double mai;
  double dmai;
  size_t class_count;
} dim_report_row;

DIM_API dim_status dim_report_create(dim_report** out);
DIM_API void dim_report_destroy(dim_report* report);

/* Analyzes each directory as one project (concurrently). Projects with
 * diagnostics are left out of the report and DIM_ERROR_PARSE is returned;
 * the remaining projects are still added. */
DIM_API dim_status dim_report_analyze(dim_report* report, const char* const* dirs, size_t count);

DIM_API size_t dim_report_project_count(const dim_report* report);
DIM_API dim_status dim_report_row_at(const dim_report* report, size_t index, dim_report_row* out);

/* "path:line:col: error: message" strings, valid while the report lives. */
DIM_API size_t dim_report_diagnostic_count(const dim_report* report);
DIM_API const char* dim_report_diagnostic_at(const dim_report* report, size_t index);
DIM_API size_t dim_report_warning_count(const dim_report* report);
DIM_API const char* dim_report_warning_at(const dim_report* report, size_t index);

DIM_API dim_status dim_report_render(const dim_report* report, dim_format format, char** out_text);

/* ---- experiment generator ---------------------------------------------- */

/* Writes di_0 ... di_100 under output_root; step must divide 100 and yield an
 * integral number of injected pens out of ten. */
DIM_API dim_status dim_generate_suite(const char* output_root, int step, size_t* out_project_count);

/* ---- statistics --------------------------------------------------------- */

typedef struct dim_stats dim_stats;

typedef struct dim_pairwise {
  size_t first;
  size_t second;
  double z;
  double p_raw;
  double p_holm;
  int rejected;
} dim_pairwise;

DIM_API dim_status dim_stats_run_csv(const char* report_csv, double threshold, dim_boundary boundary, dim_metric metric,
                                     double alpha, dim_stats** out);
DIM_API void dim_stats_destroy(dim_stats* stats);
DIM_API double dim_stats_chi_square(const dim_stats* stats);
DIM_API int dim_stats_df(const dim_stats* stats);
DIM_API double dim_stats_p_value(const dim_stats* stats);
DIM_API int dim_stats_rejected(const dim_stats* stats);
DIM_API size_t dim_stats_block_count(const dim_stats* stats);
DIM_API size_t dim_stats_treatment_count(const dim_stats* stats);
DIM_API const char* dim_stats_treatment_name(const dim_stats* stats, size_t index);
DIM_API double dim_stats_mean_rank(const dim_stats* stats, size_t index);
DIM_API size_t dim_stats_pairwise_count(const dim_stats* stats);
DIM_API dim_status dim_stats_pairwise_at(const dim_stats* stats, size_t index, dim_pairwise* out);
DIM_API size_t dim_stats_warning_count(const dim_stats* stats);
DIM_API const char* dim_stats_warning_at(const dim_stats* stats, size_t index);
DIM_API dim_status dim_stats_render(const dim_stats* stats, char** out_text);

DIM_API dim_status dim_chi_square_upper_tail(double x, int df, double* out);

/* ---- chart --------------------------------------------------------------- */

DIM_API dim_status dim_chart_svg_from_csv(const char* report_csv, char** out_svg);

#ifdef __cplusplus
}
#endif

#endif /* DIMETRICS_DIMETRICS_H_ */
