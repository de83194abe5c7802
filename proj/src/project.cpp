#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dimetrics/frontend.hpp"

namespace dimetrics::frontend {

namespace fs = std::filesystem;

std::size_t count_code_lines(std::string_view text) {
  enum class State { code, line_comment, block_comment, string, character };
  State state = State::code;
  std::size_t count = 0;
  bool line_has_code = false;

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    char next = i + 1 < text.size() ? text[i + 1] : '\0';
    if (c == '\n') {
      if (line_has_code) ++count;
      line_has_code = false;
      if (state == State::line_comment || state == State::string || state == State::character) state = State::code;
      continue;
    }
    switch (state) {
      case State::code:
        if (c == '/' && next == '/') {
          state = State::line_comment;
          ++i;
        } else if (c == '/' && next == '*') {
          state = State::block_comment;
          ++i;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
          line_has_code = true;
          if (c == '"') state = State::string;
          if (c == '\'') state = State::character;
        }
        break;
      case State::line_comment:
        break;
      case State::block_comment:
        if (c == '*' && next == '/') {
          state = State::code;
          ++i;
        }
        break;
      case State::string:
      case State::character:
        if (c == '\\' && next != '\n') {
          ++i;
        } else if ((state == State::string && c == '"') || (state == State::character && c == '\'')) {
          state = State::code;
        }
        break;
    }
  }
  if (line_has_code) ++count;
  return count;
}

SourceFile make_source(fs::path path, std::string text) {
  SourceFile file;
  file.path = std::move(path);
  file.line_count = count_code_lines(text);
  file.text = std::move(text);
  return file;
}

SourceFile read_source(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading " + path.string());
  return make_source(path, buffer.str());
}

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream out;
  out << d.path.generic_string() << ':' << d.line << ':' << d.column << ": "
      << (d.severity == Severity::error ? "error" : "warning") << ": " << d.message;
  return out.str();
}

bool ClassModel::has_field(std::string_view field_name) const {
  return std::any_of(fields.begin(), fields.end(), [&](const Field& f) { return f.name == field_name; });
}

const ClassModel* ProjectModel::find(std::string_view name) const {
  auto it = std::find_if(classes.begin(), classes.end(), [&](const ClassModel& c) { return c.name == name; });
  return it == classes.end() ? nullptr : &*it;
}

ResolveResult resolve_project(std::vector<ClassModel> models) {
  ResolveResult result;
  std::map<std::string, const ClassModel*> seen;
  for (const auto& m : models) {
    auto [it, inserted] = seen.emplace(m.name, &m);
    if (inserted) continue;
    const ClassModel& first = *it->second;
    Diagnostic d;
    d.path = m.source ? m.source->path : fs::path{};
    d.line = m.line;
    d.message = "duplicate class '" + m.name + "' (also declared in " +
                (first.source ? first.source->path.generic_string() : std::string("<memory>")) + ":" +
                std::to_string(first.line) + ")";
    result.diagnostics.push_back(std::move(d));
  }
  if (!result.diagnostics.empty()) return result;

  for (const auto& m : models) result.project.class_names.insert(m.name);
  result.project.classes = std::move(models);
  return result;
}

std::vector<fs::path> discover_sources(const fs::path& root) {
  std::vector<fs::path> files;
  if (fs::is_regular_file(root)) {
    if (root.extension() == ".java") files.push_back(root);
    return files;
  }
  for (auto it = fs::recursive_directory_iterator(root); it != fs::recursive_directory_iterator(); ++it) {
    const auto name = it->path().filename().string();
    if (it->is_directory()) {
      if (!name.empty() && name[0] == '.') it.disable_recursion_pending();
      continue;
    }
    if (it->is_regular_file() && it->path().extension() == ".java") files.push_back(it->path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace dimetrics::frontend
