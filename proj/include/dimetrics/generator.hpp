#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace dimetrics::generator {

/// One Dog class and `pen_count` DogPen classes; the first `injected_count`
/// pens receive their Dog through the constructor, the rest build their own.
struct ExperimentSpec {
  std::size_t pen_count = 10;
  std::size_t injected_count = 0;
  std::filesystem::path output_dir;

  /// Throws std::invalid_argument when the counts are out of range.
  void validate() const;
};

struct GeneratedFile {
  std::string file_name;
  std::string class_name;
  std::string text;
};

/// Class sources in emission order: Dog first, then DogPen1..DogPenN.
std::vector<GeneratedFile> render_project(const ExperimentSpec& spec);

std::string pen_class_name(std::size_t index);
std::string dog_source();
std::string injected_pen_source(const std::string& class_name);
std::string default_pen_source(const std::string& class_name);

/// Writes the project and returns the written paths. Throws std::runtime_error naming
/// the path on I/O failure.
std::vector<std::filesystem::path> generate_project(const ExperimentSpec& spec);

/// Emits di_0, di_step, ..., di_100 under output_root. `step` must divide 100 and give
/// an integral injected count for `pen_count` at every percentage.
std::vector<std::filesystem::path> generate_suite(const std::filesystem::path& output_root, int step,
                                                  std::size_t pen_count = 10);

/// Throws std::invalid_argument describing why `step` is unusable.
void validate_step(int step, std::size_t pen_count = 10);

}  // namespace dimetrics::generator
