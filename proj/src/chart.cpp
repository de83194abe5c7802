#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>

#include "dimetrics/report.hpp"

namespace dimetrics::report {

namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 60, kRight = 150, kTop = 40, kBottom = 50;

struct Series {
  const char* label;
  const char* color;
  double ReportRow::*value;
};

constexpr Series kSeries[] = {
    {"NCBO", "#1f77b4", &ReportRow::ncbo},
    {"NDCBO", "#ff7f0e", &ReportRow::ndcbo},
    {"MAI", "#2ca02c", &ReportRow::mai},
    {"DMAI", "#d62728", &ReportRow::dmai},
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Line {
  double slope;
  double intercept;
};

std::optional<Line> least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  if (n < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 0) return std::nullopt;
  double slope = sxy / sxx;
  return Line{slope, my - slope * mx};
}

}  // namespace

std::string render_chart(std::span<const ReportRow> rows) {
  std::vector<ReportRow> sorted(rows.begin(), rows.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const ReportRow& a, const ReportRow& b) { return a.di < b.di; });

  double x_min = 0.0, x_max = 1.0;
  for (const auto& r : sorted) {
    x_min = std::min(x_min, r.di);
    x_max = std::max(x_max, r.di);
  }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double y) { return kTop + (1.0 - std::clamp(y, 0.0, 1.0)) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kLeft) + "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
         "Normalized coupling and maintainability vs. DI proportion</text>\n";

  // Axes and gridlines.
  svg += "<g class=\"axes\" stroke=\"#444\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" + num(kLeft + plot_w) + "\" y2=\"" +
         num(kTop + plot_h) + "\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
         num(kTop + plot_h) + "\"/>\n";
  svg += "</g>\n<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#444\">\n";
  for (int i = 0; i <= 10; ++i) {
    double v = i / 10.0;
    double x = sx(x_min + v * (x_max - x_min));
    double y = sy(v);
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(kTop + plot_h + 16) + "\" text-anchor=\"middle\">" +
           num(x_min + v * (x_max - x_min)) + "</text>\n";
    svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(y + 3) + "\" text-anchor=\"end\">" + num(v) + "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 10) +
         "\" text-anchor=\"middle\" font-size=\"12\">DI proportion</text>\n";
  svg += "</g>\n";

  double legend_y = kTop + 10;
  for (const auto& s : kSeries) {
    std::vector<double> xs, ys;
    for (const auto& r : sorted) {
      xs.push_back(r.di);
      ys.push_back(r.*s.value);
    }
    svg += "<g class=\"series\" data-label=\"" + std::string(s.label) + "\" fill=\"" + s.color + "\" stroke=\"" +
           s.color + "\">\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
      svg += "<circle cx=\"" + num(sx(xs[i])) + "\" cy=\"" + num(sy(ys[i])) + "\" r=\"3\"/>\n";
    if (auto line = least_squares(xs, ys)) {
      double x0 = xs.front(), x1 = xs.back();
      svg += "<line class=\"trend\" x1=\"" + num(sx(x0)) + "\" y1=\"" + num(sy(line->slope * x0 + line->intercept)) +
             "\" x2=\"" + num(sx(x1)) + "\" y2=\"" + num(sy(line->slope * x1 + line->intercept)) +
             "\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"/>\n";
    }
    svg += "</g>\n";
    svg += "<rect x=\"" + num(kWidth - kRight + 20) + "\" y=\"" + num(legend_y - 8) + "\" width=\"10\" height=\"10\" fill=\"" +
           s.color + "\"/>\n";
    svg += "<text x=\"" + num(kWidth - kRight + 36) + "\" y=\"" + num(legend_y + 1) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + s.label + "</text>\n";
    legend_y += 20;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace dimetrics::report
