#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dimetrics/frontend.hpp"

namespace dimetrics::metrics {

enum class UsageKind { field_type, param_type, return_type, instantiation, invocation, supertype };

std::string_view to_string(UsageKind kind);

/// A type name referenced by a class, tagged with how it was referenced.
struct TypeReference {
  UsageKind kind;
  std::string type;
};

/// Every type reference a class makes, unfiltered.
std::vector<TypeReference> collect_references(const frontend::ClassModel& model);

/// Undirected coupling between project classes. Edge keys are ordered (smaller name first).
class CouplingGraph {
 public:
  using Edge = std::pair<std::string, std::string>;

  void add_node(const std::string& name);
  void add_usage(const std::string& a, const std::string& b, UsageKind kind);

  const std::set<std::string>& nodes() const { return nodes_; }
  const std::map<Edge, std::set<UsageKind>>& edges() const { return edges_; }
  std::size_t degree(const std::string& name) const;
  bool connected(const std::string& a, const std::string& b) const;
  const std::set<UsageKind>* provenance(const std::string& a, const std::string& b) const;

 private:
  static Edge key(const std::string& a, const std::string& b);

  std::set<std::string> nodes_;
  std::map<Edge, std::set<UsageKind>> edges_;
  std::map<std::string, std::size_t> degree_;
};

CouplingGraph build_coupling_graph(const frontend::ProjectModel& project);

struct ClassMetrics {
  std::string class_name;
  std::size_t cbo = 0;
  std::size_t rfc = 0;
  std::size_t lcom = 0;
  std::size_t loc = 0;
  std::size_t dip = 0;  // set by di::apply
  double dcbo = 0.0;    // set by di::apply
};

struct ProjectMetrics {
  std::string project_name;
  std::vector<ClassMetrics> class_metrics;
  double mean_cbo = 0.0;
  double mean_dcbo = 0.0;
  double mean_lcom = 0.0;
  double mean_rfc = 0.0;
  std::size_t total_loc = 0;
  double di_proportion = 0.0;
};

/// Own methods (constructors included) plus distinct remote (type, method) pairs.
/// `new T(...)` counts as invoking T's constructor.
std::size_t compute_rfc(const frontend::ClassModel& model, const frontend::ProjectModel& project);

/// CK LCOM1 floored at zero.
std::size_t compute_lcom(const frontend::ClassModel& model);

/// Per-class CBO/RFC/LCOM/LOC and project means. DIP and DCBO start as 0 and CBO.
/// An empty project yields zero means and a warning.
ProjectMetrics compute_project_metrics(const frontend::ProjectModel& project, const CouplingGraph& graph,
                                       std::string project_name, std::size_t total_loc,
                                       std::vector<std::string>* warnings = nullptr);

/// Recomputes every mean from the per-class values.
void refresh_means(ProjectMetrics& metrics);

}  // namespace dimetrics::metrics
