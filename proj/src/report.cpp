#include "dimetrics/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>

#include <json.hpp>

namespace dimetrics::report {

namespace fs = std::filesystem;
using frontend::SourceFile;

ProjectAnalysis analyze_sources(std::string name, const std::vector<std::shared_ptr<const SourceFile>>& files) {
  ProjectAnalysis a;
  a.name = std::move(name);

  std::vector<frontend::ClassModel> models;
  std::size_t total_loc = 0;
  for (const auto& f : files) {
    total_loc += f->line_count;
    auto parsed = frontend::parse_source(f);
    if (!parsed.ok()) {
      a.diagnostics.insert(a.diagnostics.end(), parsed.diagnostics.begin(), parsed.diagnostics.end());
      continue;
    }
    for (auto& c : parsed.classes) models.push_back(std::move(c));
  }
  if (!a.ok()) return a;

  auto resolved = frontend::resolve_project(std::move(models));
  if (!resolved.ok()) {
    a.diagnostics = std::move(resolved.diagnostics);
    return a;
  }
  a.project = std::move(resolved.project);
  a.graph = metrics::build_coupling_graph(a.project);
  a.metrics = metrics::compute_project_metrics(a.project, a.graph, a.name, total_loc, &a.warnings);
  a.di = di::detect_injections(a.project);
  di::apply(a.di, a.metrics);
  a.scores = maintainability::compute_scores(a.metrics);
  return a;
}

std::string project_name_for(const fs::path& dir) {
  fs::path p = dir.lexically_normal();
  if (p.filename().empty()) p = p.parent_path();
  if (p.empty() || p.filename() == "." || p.filename() == "..") p = fs::absolute(p).lexically_normal();
  if (p.filename().empty()) p = p.parent_path();
  std::string name = p.filename().string();
  return name.empty() ? std::string("project") : name;
}

ProjectAnalysis analyze_directory(const fs::path& dir) {
  std::vector<std::shared_ptr<const SourceFile>> files;
  for (const auto& path : frontend::discover_sources(dir))
    files.push_back(std::make_shared<const SourceFile>(frontend::read_source(path)));
  return analyze_sources(project_name_for(dir), files);
}

std::vector<ProjectAnalysis> analyze_directories(std::span<const fs::path> dirs) {
  std::vector<std::future<ProjectAnalysis>> pending;
  for (const auto& d : dirs) pending.push_back(std::async(std::launch::async, [d] { return analyze_directory(d); }));
  std::vector<ProjectAnalysis> out;
  for (auto& f : pending) out.push_back(f.get());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return natural_less(a.name, b.name); });
  return out;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t i_end = i, j_end = j;
      while (i_end < a.size() && digit(a[i_end])) ++i_end;
      while (j_end < b.size() && digit(b[j_end])) ++j_end;
      std::string_view na = a.substr(i, i_end - i), nb = b.substr(j, j_end - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = i_end;
      j = j_end;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

ReportRow make_row(const ProjectAnalysis& a) {
  ReportRow r;
  r.project = a.name;
  r.di = a.metrics.di_proportion;
  r.cbo = a.metrics.mean_cbo;
  r.dcbo = a.metrics.mean_dcbo;
  r.lcom = a.metrics.mean_lcom;
  r.rfc = a.metrics.mean_rfc;
  r.loc = a.metrics.total_loc;
  r.ncbo = a.scores.ncbo;
  r.ndcbo = a.scores.ndcbo;
  r.nlcom = a.scores.nlcom;
  r.nrfc = a.scores.nrfc;
  r.mai = a.scores.mai;
  r.dmai = a.scores.dmai;
  return r;
}

std::string format_fixed(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // The nudge makes exact decimal halves that binary stores just below .5 round up.
  double rounded = std::floor(value * scale + 0.5 + 1e-9) / scale;
  if (rounded == 0.0) rounded = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, rounded);
  return buf;
}

std::vector<std::string> display_cells(const ReportRow& r) {
  return {r.project,          format_fixed(r.di),    format_fixed(r.cbo),   format_fixed(r.dcbo),  format_fixed(r.lcom),
          format_fixed(r.rfc), std::to_string(r.loc), format_fixed(r.ncbo), format_fixed(r.ndcbo), format_fixed(r.nlcom),
          format_fixed(r.nrfc), format_fixed(r.mai),  format_fixed(r.dmai)};
}

std::string render_csv(std::span<const ReportRow> rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    auto cells = display_cells(r);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  }
  return out;
}

namespace {

const std::vector<std::string> kColumns = {"project", "di",    "cbo",   "dcbo",  "lcom", "rfc", "loc",
                                           "ncbo",    "ndcbo", "nlcom", "nrfc", "mai",  "dmai"};

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    cells.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

double parse_number(const std::string& cell, std::size_t line, std::string_view column) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty() || !std::isfinite(v))
    throw CsvError(line, "invalid number '" + cell + "' in column " + std::string(column));
  return v;
}

}  // namespace

std::vector<ReportRow> parse_csv(std::string_view text) {
  std::vector<ReportRow> rows;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw CsvError(line_no, "expected header '" + std::string(kCsvHeader) + "'");
      header_seen = true;
      continue;
    }
    auto cells = split_line(line);
    if (cells.size() != kColumns.size())
      throw CsvError(line_no, "expected " + std::to_string(kColumns.size()) + " fields, found " +
                                  std::to_string(cells.size()));
    if (cells[0].empty()) throw CsvError(line_no, "empty project name");
    ReportRow r;
    r.project = cells[0];
    double* targets[] = {&r.di, &r.cbo, &r.dcbo, &r.lcom, &r.rfc, nullptr,
                         &r.ncbo, &r.ndcbo, &r.nlcom, &r.nrfc, &r.mai, &r.dmai};
    for (std::size_t i = 1; i < cells.size(); ++i) {
      double v = parse_number(cells[i], line_no, kColumns[i]);
      if (v < 0) throw CsvError(line_no, "negative value in column " + kColumns[i]);
      if (targets[i - 1]) {
        *targets[i - 1] = v;
      } else {
        if (v != std::floor(v)) throw CsvError(line_no, "loc must be an integer");
        r.loc = static_cast<std::size_t>(v);
      }
    }
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw CsvError(line_no == 0 ? 1 : line_no, "missing header");
  return rows;
}

std::string render_json(std::span<const ProjectAnalysis> analyses) {
  nlohmann::ordered_json projects = nlohmann::ordered_json::array();
  for (const auto& a : analyses) {
    if (!a.ok()) continue;
    ReportRow row = make_row(a);
    auto cells = display_cells(row);
    nlohmann::ordered_json values = {
        {"di", row.di},       {"cbo", row.cbo},     {"dcbo", row.dcbo},   {"lcom", row.lcom},   {"rfc", row.rfc},
        {"loc", row.loc},     {"ncbo", row.ncbo},   {"ndcbo", row.ndcbo}, {"nlcom", row.nlcom}, {"nrfc", row.nrfc},
        {"mai", row.mai},     {"dmai", row.dmai}};
    nlohmann::ordered_json display = nlohmann::ordered_json::object();
    for (std::size_t i = 1; i < kColumns.size(); ++i) display[kColumns[i]] = cells[i];

    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (const auto& c : a.metrics.class_metrics) {
      classes.push_back({{"name", c.class_name},
                         {"cbo", c.cbo},
                         {"rfc", c.rfc},
                         {"lcom", c.lcom},
                         {"loc", c.loc},
                         {"dip", c.dip},
                         {"dcbo", c.dcbo}});
    }
    nlohmann::ordered_json findings = nlohmann::ordered_json::array();
    for (const auto& f : a.di.findings) {
      findings.push_back(
          {{"client", f.client_class}, {"dependency", f.dependency_class}, {"pattern", di::to_string(f.pattern)}});
    }
    projects.push_back({{"project", a.name},
                        {"values", values},
                        {"display", display},
                        {"classes", classes},
                        {"findings", findings},
                        {"warnings", a.warnings}});
  }
  nlohmann::ordered_json root = {{"projects", projects}};
  return root.dump(2) + "\n";
}

}  // namespace dimetrics::report
