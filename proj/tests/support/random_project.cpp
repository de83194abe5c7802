#include "support/random_project.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <regex>

#include "test_support.hpp"

namespace dimetrics::test {

namespace {

const char* const kNames[] = {"Anchor", "Beacon", "Cargo", "Dock", "Engine", "Ferry"};

std::string lower_first(std::string s) {
  s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return s;
}

bool has_field(DepMode m) {
  return m == DepMode::owned_default || m == DepMode::injected || m == DepMode::field_only;
}

}  // namespace

ProjectBlueprint random_blueprint(std::mt19937& rng, std::size_t max_classes) {
  std::uniform_int_distribution<std::size_t> count(1, std::min<std::size_t>(max_classes, std::size(kNames)));
  std::uniform_int_distribution<int> mode(0, 5);
  std::bernoulli_distribution coin(0.5), rare(0.2);

  ProjectBlueprint bp;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    ClassBlueprint c;
    c.name = kNames[i];
    c.noise = coin(rng);
    if (i > 0 && rare(rng)) c.super = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !coin(rng)) continue;
      c.deps.push_back({j, static_cast<DepMode>(mode(rng))});
    }
    bp.classes.push_back(std::move(c));
  }
  if (n >= 2 && !first_owned_default(bp)) {
    auto& client = bp.classes[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
    std::size_t client_index = static_cast<std::size_t>(&client - bp.classes.data());
    std::size_t target = (client_index + 1) % n;
    auto it = std::find_if(client.deps.begin(), client.deps.end(), [&](const auto& d) { return d.target == target; });
    if (it != client.deps.end())
      it->mode = DepMode::owned_default;
    else
      client.deps.push_back({target, DepMode::owned_default});
  }
  return bp;
}

std::string render_class(const ProjectBlueprint& bp, std::size_t index) {
  const auto& c = bp.classes[index];
  auto target_name = [&](const Dependency& d) { return bp.classes[d.target].name; };

  std::string out = "class " + c.name;
  if (c.super) out += " extends " + bp.classes[*c.super].name;
  out += " {\n";
  for (const auto& d : c.deps)
    if (has_field(d.mode)) out += "  private " + target_name(d) + " " + lower_first(target_name(d)) + ";\n";
  if (c.noise) out += "  String label;\n  int count;\n  Helper helper;\n";

  std::vector<std::string> params, body;
  for (const auto& d : c.deps) {
    std::string t = target_name(d), f = lower_first(t);
    if (d.mode == DepMode::injected) {
      params.push_back(t + " " + f + "In");
      body.push_back("    this." + f + " = " + f + "In;");
    } else if (d.mode == DepMode::owned_default) {
      body.push_back("    this." + f + " = new " + t + "();");
    }
  }
  if (!body.empty()) {
    out += "\n  public " + c.name + "(";
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? ", " : "") + params[i];
    out += ") {\n";
    for (const auto& line : body) out += line + "\n";
    out += "  }\n";
  }

  out += "\n  public void run() { }\n";
  for (const auto& d : c.deps) {
    if (d.mode != DepMode::method_param) continue;
    out += "\n  void use" + target_name(d) + "(" + target_name(d) + " p) {\n    p.run();\n  }\n";
  }
  std::vector<std::string> work;
  for (const auto& d : c.deps) {
    std::string t = target_name(d);
    if (d.mode == DepMode::local_new) work.push_back("    " + t + " x" + t + " = new " + t + "();");
    if (d.mode == DepMode::static_call) work.push_back("    " + t + ".run();");
  }
  if (!work.empty()) {
    out += "\n  void work() {\n";
    for (const auto& line : work) out += line + "\n";
    out += "  }\n";
  }
  if (c.noise) out += "\n  void touch() {\n    label = \"x\";\n    count = 1;\n  }\n";
  out += "}\n";
  return out;
}

std::vector<std::string> render_blueprint(const ProjectBlueprint& bp) {
  std::vector<std::string> texts;
  for (std::size_t i = 0; i < bp.classes.size(); ++i) texts.push_back(render_class(bp, i));
  return texts;
}

std::vector<std::string> class_names(const ProjectBlueprint& bp) {
  std::vector<std::string> names;
  for (const auto& c : bp.classes) names.push_back(c.name);
  return names;
}

std::map<std::string, std::size_t> brute_force_degrees(const std::vector<std::string>& names,
                                                       const std::vector<std::string>& texts) {
  const std::size_t n = names.size();
  auto mentions = [&](std::size_t i, std::size_t j) {
    return std::regex_search(texts[i], std::regex("\\b" + names[j] + "\\b"));
  };
  std::map<std::string, std::size_t> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (mentions(i, j) || mentions(j, i))) ++d;
    degrees[names[i]] = d;
  }
  return degrees;
}

std::optional<di::Pattern> expected_pattern(const ProjectBlueprint& bp, std::size_t client, std::size_t target) {
  const auto& c = bp.classes[client];
  for (const auto& d : c.deps) {
    if (d.target != target) continue;
    switch (d.mode) {
      case DepMode::injected: return di::Pattern::CND;
      case DepMode::method_param: return di::Pattern::MND;
      default: return di::Pattern::HARD;
    }
  }
  if (c.super == target) return di::Pattern::HARD;
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> first_owned_default(const ProjectBlueprint& bp) {
  for (std::size_t i = 0; i < bp.classes.size(); ++i)
    for (std::size_t k = 0; k < bp.classes[i].deps.size(); ++k)
      if (bp.classes[i].deps[k].mode == DepMode::owned_default) return std::make_pair(i, k);
  return std::nullopt;
}

ProjectBlueprint convert_to_injection(ProjectBlueprint bp, std::size_t client, std::size_t dep) {
  bp.classes.at(client).deps.at(dep).mode = DepMode::injected;
  return bp;
}

PropertyOutcome check_random_projects(std::uint32_t seed, std::size_t count) {
  PropertyOutcome out;
  std::mt19937 rng(seed);
  for (std::size_t p = 0; p < count; ++p) {
    auto bp = random_blueprint(rng);
    auto texts = render_blueprint(bp);
    const std::string tag = "project " + std::to_string(p) + ": ";
    auto a = analyze_texts(texts, "random_" + std::to_string(p));
    ++out.projects;
    if (!a.ok()) {
      out.cbo_oracle.push_back(tag + format_diagnostic(a.diagnostics.front()));
      continue;
    }

    auto oracle = brute_force_degrees(class_names(bp), texts);
    for (const auto& c : a.metrics.class_metrics) {
      if (oracle.at(c.class_name) != c.cbo)
        out.cbo_oracle.push_back(tag + c.class_name + " cbo " + std::to_string(c.cbo) + " oracle " +
                                 std::to_string(oracle.at(c.class_name)));
      bool bounded = c.dcbo <= static_cast<double>(c.cbo);
      bool equal_iff = (c.dcbo == static_cast<double>(c.cbo)) == (c.dip == 0);
      if (!bounded || !equal_iff) out.dcbo_bound.push_back(tag + c.class_name);
    }
    if (!(a.metrics.di_proportion >= 0.0 && a.metrics.di_proportion <= 1.0))
      out.di_range.push_back(tag + std::to_string(a.metrics.di_proportion));
    const auto& s = a.scores;
    if (!(s.mai >= 0 && s.mai <= 1 && s.dmai >= 0 && s.dmai <= 1 && s.dmai >= s.mai))
      out.score_range.push_back(tag + "mai " + std::to_string(s.mai) + " dmai " + std::to_string(s.dmai));

    auto site = first_owned_default(bp);
    if (!site) continue;
    ++out.conversions;
    auto converted = analyze_texts(render_blueprint(convert_to_injection(bp, site->first, site->second)));
    const double n = static_cast<double>(bp.classes.size());
    if (!converted.ok() || converted.metrics.mean_cbo != a.metrics.mean_cbo ||
        std::abs((a.metrics.mean_dcbo - converted.metrics.mean_dcbo) - 1.0 / n) > 1e-12)
      out.conversion_delta.push_back(tag + "mean dcbo " + std::to_string(a.metrics.mean_dcbo) + " -> " +
                                     std::to_string(converted.metrics.mean_dcbo));
  }
  return out;
}

}  // namespace dimetrics::test
