#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dimetrics::frontend {

struct SourceFile {
  std::filesystem::path path;
  std::string text;
  std::size_t line_count = 0;  // non-blank, non-comment lines
};

/// Builds a SourceFile from in-memory text, computing its code line count.
SourceFile make_source(std::filesystem::path path, std::string text);

/// Reads a file from disk. Throws std::runtime_error naming the path on failure.
SourceFile read_source(const std::filesystem::path& path);

/// Counts lines holding at least one character outside comments and whitespace.
std::size_t count_code_lines(std::string_view text);

enum class Severity { error, warning };

struct Diagnostic {
  std::filesystem::path path;
  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;
  Severity severity = Severity::error;
};

/// "path:line:col: error: message"
std::string format_diagnostic(const Diagnostic& d);

struct Field {
  std::string name;
  std::string type;  // element type for arrays
  bool operator==(const Field&) const = default;
};

struct MethodModel {
  std::string name;
  bool is_constructor = false;
  std::string return_type;  // empty for constructors and void
  std::vector<std::string> param_types;
  std::multiset<std::string> instantiated_types;
  std::set<std::pair<std::string, std::string>> invoked_methods;  // (receiver type, method)
  std::set<std::string> accessed_fields;
};

/// Object creations and invocations found in field initializers.
struct InitializerUsage {
  std::multiset<std::string> instantiated_types;
  std::set<std::pair<std::string, std::string>> invoked_methods;
};

struct ClassModel {
  std::string name;
  std::vector<std::string> super_types;
  std::vector<Field> fields;
  std::vector<MethodModel> methods;
  InitializerUsage initializers;
  std::size_t loc = 0;
  std::size_t line = 1;
  std::shared_ptr<const SourceFile> source;

  bool has_field(std::string_view field_name) const;
};

struct ParseResult {
  std::vector<ClassModel> classes;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

/// Parses one file under the strict grammar documented in docs/grammar.md.
/// Any unsupported construct yields a single diagnostic and no classes.
ParseResult parse_source(std::shared_ptr<const SourceFile> file);

struct ProjectModel {
  std::vector<ClassModel> classes;
  std::set<std::string> class_names;

  const ClassModel* find(std::string_view name) const;
  bool is_project_class(const std::string& name) const { return class_names.count(name) != 0; }
};

struct ResolveResult {
  ProjectModel project;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

/// Fails with one diagnostic per duplicated class name.
ResolveResult resolve_project(std::vector<ClassModel> models);

/// Recursively collects `.java` files under root, skipping hidden directories. Sorted.
std::vector<std::filesystem::path> discover_sources(const std::filesystem::path& root);

}  // namespace dimetrics::frontend
