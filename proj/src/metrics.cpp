#include "dimetrics/metrics.hpp"

#include <algorithm>

namespace dimetrics::metrics {

using frontend::ClassModel;
using frontend::ProjectModel;

std::string_view to_string(UsageKind kind) {
  switch (kind) {
    case UsageKind::field_type: return "field-type";
    case UsageKind::param_type: return "param-type";
    case UsageKind::return_type: return "return-type";
    case UsageKind::instantiation: return "instantiation";
    case UsageKind::invocation: return "invocation";
    case UsageKind::supertype: return "supertype";
  }
  return "unknown";
}

std::vector<TypeReference> collect_references(const ClassModel& model) {
  std::vector<TypeReference> refs;
  for (const auto& s : model.super_types) refs.push_back({UsageKind::supertype, s});
  for (const auto& f : model.fields) refs.push_back({UsageKind::field_type, f.type});
  for (const auto& t : model.initializers.instantiated_types) refs.push_back({UsageKind::instantiation, t});
  for (const auto& [type, method] : model.initializers.invoked_methods) refs.push_back({UsageKind::invocation, type});
  for (const auto& m : model.methods) {
    for (const auto& p : m.param_types) refs.push_back({UsageKind::param_type, p});
    if (!m.return_type.empty()) refs.push_back({UsageKind::return_type, m.return_type});
    for (const auto& t : m.instantiated_types) refs.push_back({UsageKind::instantiation, t});
    for (const auto& [type, method] : m.invoked_methods) refs.push_back({UsageKind::invocation, type});
  }
  return refs;
}

CouplingGraph::Edge CouplingGraph::key(const std::string& a, const std::string& b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

void CouplingGraph::add_node(const std::string& name) {
  nodes_.insert(name);
  degree_.emplace(name, 0);
}

void CouplingGraph::add_usage(const std::string& a, const std::string& b, UsageKind kind) {
  if (a == b) return;
  add_node(a);
  add_node(b);
  auto [it, inserted] = edges_.try_emplace(key(a, b));
  if (inserted) {
    ++degree_[a];
    ++degree_[b];
  }
  it->second.insert(kind);
}

std::size_t CouplingGraph::degree(const std::string& name) const {
  auto it = degree_.find(name);
  return it == degree_.end() ? 0 : it->second;
}

bool CouplingGraph::connected(const std::string& a, const std::string& b) const { return provenance(a, b) != nullptr; }

const std::set<UsageKind>* CouplingGraph::provenance(const std::string& a, const std::string& b) const {
  auto it = edges_.find(key(a, b));
  return it == edges_.end() ? nullptr : &it->second;
}

CouplingGraph build_coupling_graph(const ProjectModel& project) {
  CouplingGraph graph;
  for (const auto& c : project.classes) graph.add_node(c.name);
  for (const auto& c : project.classes) {
    for (const auto& ref : collect_references(c)) {
      if (ref.type != c.name && project.is_project_class(ref.type)) graph.add_usage(c.name, ref.type, ref.kind);
    }
  }
  return graph;
}

std::size_t compute_rfc(const ClassModel& model, const ProjectModel& project) {
  std::set<std::pair<std::string, std::string>> remote;
  auto is_remote = [&](const std::string& type) { return type != model.name && project.is_project_class(type); };
  auto add_usage = [&](const std::multiset<std::string>& created,
                       const std::set<std::pair<std::string, std::string>>& invoked) {
    for (const auto& t : created)
      if (is_remote(t)) remote.emplace(t, t);
    for (const auto& call : invoked)
      if (is_remote(call.first)) remote.insert(call);
  };
  add_usage(model.initializers.instantiated_types, model.initializers.invoked_methods);
  for (const auto& m : model.methods) add_usage(m.instantiated_types, m.invoked_methods);
  return model.methods.size() + remote.size();
}

std::size_t compute_lcom(const ClassModel& model) {
  const auto& methods = model.methods;
  std::size_t disjoint = 0;
  std::size_t sharing = 0;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (std::size_t j = i + 1; j < methods.size(); ++j) {
      const auto& a = methods[i].accessed_fields;
      const auto& b = methods[j].accessed_fields;
      bool shares = std::any_of(a.begin(), a.end(), [&](const std::string& f) { return b.count(f) != 0; });
      ++(shares ? sharing : disjoint);
    }
  }
  return disjoint > sharing ? disjoint - sharing : 0;
}

void refresh_means(ProjectMetrics& pm) {
  const auto& cms = pm.class_metrics;
  if (cms.empty()) {
    pm.mean_cbo = pm.mean_dcbo = pm.mean_lcom = pm.mean_rfc = 0.0;
    return;
  }
  double cbo = 0, dcbo = 0, lcom = 0, rfc = 0;
  for (const auto& c : cms) {
    cbo += static_cast<double>(c.cbo);
    dcbo += c.dcbo;
    lcom += static_cast<double>(c.lcom);
    rfc += static_cast<double>(c.rfc);
  }
  const auto n = static_cast<double>(cms.size());
  pm.mean_cbo = cbo / n;
  pm.mean_dcbo = dcbo / n;
  pm.mean_lcom = lcom / n;
  pm.mean_rfc = rfc / n;
}

ProjectMetrics compute_project_metrics(const ProjectModel& project, const CouplingGraph& graph,
                                       std::string project_name, std::size_t total_loc,
                                       std::vector<std::string>* warnings) {
  ProjectMetrics pm;
  pm.project_name = std::move(project_name);
  pm.total_loc = total_loc;
  for (const auto& c : project.classes) {
    ClassMetrics cm;
    cm.class_name = c.name;
    cm.cbo = graph.degree(c.name);
    cm.rfc = compute_rfc(c, project);
    cm.lcom = compute_lcom(c);
    cm.loc = c.loc;
    cm.dcbo = static_cast<double>(cm.cbo);
    pm.class_metrics.push_back(std::move(cm));
  }
  std::sort(pm.class_metrics.begin(), pm.class_metrics.end(),
            [](const ClassMetrics& a, const ClassMetrics& b) { return a.class_name < b.class_name; });
  if (pm.class_metrics.empty() && warnings) warnings->push_back("project '" + pm.project_name + "' has no classes");
  refresh_means(pm);
  return pm;
}

}  // namespace dimetrics::metrics
