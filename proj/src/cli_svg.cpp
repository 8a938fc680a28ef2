// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

// Minimal static SVG line plot for sweep outputs. Derived output only; the
// CSV is the authoritative artifact.

#include "cli_internal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace casimir::cli::detail_svg {

namespace {

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[40];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

}  // namespace

void write_svg_line_plot(const std::string& path, const std::vector<Series>& series,
                         std::string x_label, const std::string& y_label) {
  constexpr double width = 720.0, height = 480.0;
  constexpr double ml = 80.0, mr = 20.0, mt = 20.0, mb = 50.0;

  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
  bool first = true;
  bool all_x_positive = true;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
      if (s.xs[i] <= 0.0) all_x_positive = false;
      if (first) {
        x_min = x_max = s.xs[i];
        y_min = y_max = s.ys[i];
        first = false;
      } else {
        x_min = std::min(x_min, s.xs[i]);
        x_max = std::max(x_max, s.xs[i]);
        y_min = std::min(y_min, s.ys[i]);
        y_max = std::max(y_max, s.ys[i]);
      }
    }
  if (first) throw std::runtime_error("svg plot: no finite data points");

  const bool log_x = all_x_positive && x_min > 0.0 && x_max / x_min > 100.0;
  if (log_x) {
    x_min = std::log10(x_min);
    x_max = std::log10(x_max);
    x_label = "log10(" + x_label + ")";
  }
  if (x_max == x_min) {
    x_min -= 0.5;
    x_max += 0.5;
  }
  if (y_max == y_min) {
    y_min -= 0.5;
    y_max += 0.5;
  }

  auto px = [&](double x) {
    if (log_x) x = std::log10(x);
    return ml + (x - x_min) / (x_max - x_min) * (width - ml - mr);
  };
  auto py = [&](double y) {
    return height - mb - (y - y_min) / (y_max - y_min) * (height - mt - mb);
  };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open svg output '" + path + "'");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << (width - ml - mr)
      << "\" height=\"" << (height - mt - mb)
      << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";

  std::size_t color = 0;
  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << colors[color % 5]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
      out << fmt(px(s.xs[i]), "%.2f") << ',' << fmt(py(s.ys[i]), "%.2f") << ' ';
    }
    out << "\"/>\n";
    if (series.size() > 1 && !s.label.empty())
      out << "<text x=\"" << (ml + 10) << "\" y=\"" << (mt + 16 + 14 * static_cast<double>(color))
          << "\" font-size=\"11\" fill=\"" << colors[color % 5] << "\">" << s.label << "</text>\n";
    ++color;
  }

  out << "<text x=\"" << ml << "\" y=\"" << (height - mb + 16)
      << "\" font-size=\"11\" text-anchor=\"start\">" << fmt(x_min) << "</text>\n";
  out << "<text x=\"" << (width - mr) << "\" y=\"" << (height - mb + 16)
      << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(x_max) << "</text>\n";
  out << "<text x=\"" << (ml - 6) << "\" y=\"" << (height - mb)
      << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(y_min) << "</text>\n";
  out << "<text x=\"" << (ml - 6) << "\" y=\"" << (mt + 10)
      << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(y_max) << "</text>\n";
  out << "<text x=\"" << (ml + (width - ml - mr) / 2) << "\" y=\"" << (height - 12)
      << "\" font-size=\"12\" text-anchor=\"middle\">" << x_label << "</text>\n";
  out << "<text x=\"14\" y=\"" << (mt + (height - mt - mb) / 2)
      << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << (mt + (height - mt - mb) / 2) << ")\">" << y_label << "</text>\n";
  out << "</svg>\n";
}

}  // namespace casimir::cli::detail_svg
