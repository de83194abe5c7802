#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dimetrics/frontend.hpp"
#include "dimetrics/metrics.hpp"

namespace dimetrics::di {

/// CND/MND are parameter injection without an internal default; CWD/MWD add a
/// default `new`; HARD means the dependency is referenced but never a parameter.
enum class Pattern { CND, MND, CWD, MWD, HARD };

std::string_view to_string(Pattern p);

struct InjectionSite {
  std::string method;
  bool in_constructor = false;
  bool is_creation = false;     // `new Dependency(...)` rather than a parameter
  std::size_t param_index = 0;  // meaningful for parameter sites only
};

struct InjectionFinding {
  std::string client_class;
  std::string dependency_class;
  Pattern pattern = Pattern::HARD;
  std::vector<InjectionSite> sites;

  bool is_injected() const { return pattern == Pattern::CND || pattern == Pattern::MND; }
};

struct DiSummary {
  std::vector<InjectionFinding> findings;  // sorted by (client, dependency)
  std::map<std::string, std::size_t> dip_per_class;
  double di_proportion = 0.0;

  std::size_t dip_total() const;
};

/// One finding per (client, dependency) pair where the client references a project class.
DiSummary detect_injections(const frontend::ProjectModel& project);

/// (2 * sum DIP) / (sum CBO), clamped to [0, 1]; 0 when no coupling exists.
double compute_di_proportion(const DiSummary& summary, const metrics::ProjectMetrics& metrics);

/// CBO - DIP. Throws std::logic_error if DIP exceeds CBO.
double compute_dcbo(const metrics::ClassMetrics& class_metrics, const DiSummary& summary);

/// Fills dip/dcbo per class, mean DCBO and the DI proportion.
void apply(DiSummary& summary, metrics::ProjectMetrics& metrics);

}  // namespace dimetrics::di
