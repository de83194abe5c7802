#include "dimetrics/generator.hpp"

#include <fstream>
#include <stdexcept>

namespace dimetrics::generator {

namespace fs = std::filesystem;

void ExperimentSpec::validate() const {
  if (pen_count == 0) throw std::invalid_argument("pen_count must be positive");
  if (injected_count > pen_count)
    throw std::invalid_argument("injected_count " + std::to_string(injected_count) + " exceeds pen_count " +
                                std::to_string(pen_count));
}

std::string pen_class_name(std::size_t index) { return "DogPen" + std::to_string(index); }

// 8 code lines.
std::string dog_source() {
  return "public class Dog {\n"
         "    private String name;\n"
         "\n"
         "    public Dog() { this.name = \"Rex\"; }\n"
         "\n"
         "    public String getName() {\n"
         "        String current = this.name;\n"
         "        return current;\n"
         "    }\n"
         "}\n";
}

// 8 code lines; constructor injection, no default.
std::string injected_pen_source(const std::string& class_name) {
  return "public class " + class_name + " {\n" +
         "    private Dog dog;\n"
         "\n"
         "    public " + class_name + "(Dog dog) { this.dog = dog; }\n" +
         "\n"
         "    public Dog getDog() {\n"
         "        Dog current = this.dog;\n"
         "        return current;\n"
         "    }\n"
         "}\n";
}

// 10 code lines; the pen builds its own Dog.
std::string default_pen_source(const std::string& class_name) {
  return "public class " + class_name + " {\n" +
         "    private Dog dog;\n"
         "\n"
         "    public " + class_name + "() {\n" +
         "        this.dog = new Dog();\n"
         "    }\n"
         "\n"
         "    public Dog getDog() {\n"
         "        Dog current = this.dog;\n"
         "        return current;\n"
         "    }\n"
         "}\n";
}

std::vector<GeneratedFile> render_project(const ExperimentSpec& spec) {
  spec.validate();
  std::vector<GeneratedFile> files;
  files.push_back({"Dog.java", "Dog", dog_source()});
  for (std::size_t i = 1; i <= spec.pen_count; ++i) {
    std::string name = pen_class_name(i);
    std::string text = i <= spec.injected_count ? injected_pen_source(name) : default_pen_source(name);
    files.push_back({name + ".java", name, std::move(text)});
  }
  return files;
}

std::vector<fs::path> generate_project(const ExperimentSpec& spec) {
  auto files = render_project(spec);
  std::error_code ec;
  fs::create_directories(spec.output_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + spec.output_dir.string() + ": " + ec.message());

  std::vector<fs::path> written;
  for (const auto& f : files) {
    fs::path path = spec.output_dir / f.file_name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << f.text;
    out.close();
    if (!out) throw std::runtime_error("error writing " + path.string());
    written.push_back(std::move(path));
  }
  return written;
}

void validate_step(int step, std::size_t pen_count) {
  if (step <= 0 || step > 100) throw std::invalid_argument("step must be in 1..100, got " + std::to_string(step));
  if (100 % step != 0) throw std::invalid_argument("step " + std::to_string(step) + " does not divide 100");
  for (int pct = 0; pct <= 100; pct += step) {
    if ((static_cast<std::size_t>(pct) * pen_count) % 100 != 0)
      throw std::invalid_argument("step " + std::to_string(step) + " gives a non-integral injected count at " +
                                  std::to_string(pct) + "% of " + std::to_string(pen_count) + " pens");
  }
}

std::vector<fs::path> generate_suite(const fs::path& output_root, int step, std::size_t pen_count) {
  validate_step(step, pen_count);
  std::vector<fs::path> dirs;
  for (int pct = 0; pct <= 100; pct += step) {
    ExperimentSpec spec;
    spec.pen_count = pen_count;
    spec.injected_count = static_cast<std::size_t>(pct) * pen_count / 100;
    spec.output_dir = output_root / ("di_" + std::to_string(pct));
    generate_project(spec);
    dirs.push_back(spec.output_dir);
  }
  return dirs;
}

}  // namespace dimetrics::generator
