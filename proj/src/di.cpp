#include "dimetrics/di.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace dimetrics::di {

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::CND: return "CND";
    case Pattern::MND: return "MND";
    case Pattern::CWD: return "CWD";
    case Pattern::MWD: return "MWD";
    case Pattern::HARD: return "HARD";
  }
  return "HARD";
}

std::size_t DiSummary::dip_total() const {
  std::size_t total = 0;
  for (const auto& [name, dip] : dip_per_class) total += dip;
  return total;
}

namespace {

InjectionFinding classify(const frontend::ClassModel& client, const std::string& dependency) {
  InjectionFinding finding;
  finding.client_class = client.name;
  finding.dependency_class = dependency;

  bool constructor_param = false;
  bool any_param = false;
  bool any_creation = client.initializers.instantiated_types.count(dependency) != 0;
  if (any_creation) finding.sites.push_back(InjectionSite{"", false, true, 0});

  for (const auto& m : client.methods) {
    for (std::size_t i = 0; i < m.param_types.size(); ++i) {
      if (m.param_types[i] != dependency) continue;
      any_param = true;
      constructor_param = constructor_param || m.is_constructor;
      finding.sites.push_back(InjectionSite{m.name, m.is_constructor, false, i});
    }
    if (m.instantiated_types.count(dependency) != 0) {
      any_creation = true;
      finding.sites.push_back(InjectionSite{m.name, m.is_constructor, true, 0});
    }
  }

  if (!any_param)
    finding.pattern = Pattern::HARD;
  else if (any_creation)
    finding.pattern = constructor_param ? Pattern::CWD : Pattern::MWD;
  else
    finding.pattern = constructor_param ? Pattern::CND : Pattern::MND;
  return finding;
}

}  // namespace

DiSummary detect_injections(const frontend::ProjectModel& project) {
  DiSummary summary;
  for (const auto& c : project.classes) {
    summary.dip_per_class[c.name] = 0;
    std::set<std::string> dependencies;
    for (const auto& ref : metrics::collect_references(c))
      if (ref.type != c.name && project.is_project_class(ref.type)) dependencies.insert(ref.type);

    for (const auto& d : dependencies) {
      InjectionFinding f = classify(c, d);
      if (f.is_injected()) ++summary.dip_per_class[c.name];
      summary.findings.push_back(std::move(f));
    }
  }
  std::sort(summary.findings.begin(), summary.findings.end(), [](const auto& a, const auto& b) {
    return std::tie(a.client_class, a.dependency_class) < std::tie(b.client_class, b.dependency_class);
  });
  return summary;
}

double compute_di_proportion(const DiSummary& summary, const metrics::ProjectMetrics& metrics) {
  std::size_t cbo_total = 0;
  for (const auto& c : metrics.class_metrics) cbo_total += c.cbo;
  if (cbo_total == 0) return 0.0;
  double p = 2.0 * static_cast<double>(summary.dip_total()) / static_cast<double>(cbo_total);
  return std::clamp(p, 0.0, 1.0);
}

double compute_dcbo(const metrics::ClassMetrics& class_metrics, const DiSummary& summary) {
  auto it = summary.dip_per_class.find(class_metrics.class_name);
  std::size_t dip = it == summary.dip_per_class.end() ? 0 : it->second;
  if (dip > class_metrics.cbo)
    throw std::logic_error("class '" + class_metrics.class_name + "' has DIP " + std::to_string(dip) +
                           " greater than CBO " + std::to_string(class_metrics.cbo));
  return static_cast<double>(class_metrics.cbo - dip);
}

void apply(DiSummary& summary, metrics::ProjectMetrics& metrics) {
  for (auto& c : metrics.class_metrics) {
    c.dcbo = compute_dcbo(c, summary);
    c.dip = c.cbo - static_cast<std::size_t>(c.dcbo);
  }
  metrics::refresh_means(metrics);
  summary.di_proportion = compute_di_proportion(summary, metrics);
  metrics.di_proportion = summary.di_proportion;
}

}  // namespace dimetrics::di
