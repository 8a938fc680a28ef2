// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace casimir::cli::detail_svg {

struct Series {
  std::vector<double> xs;
  std::vector<double> ys;
  std::string label;
};

void write_svg_line_plot(const std::string& path, const std::vector<Series>& series,
                         std::string x_label, const std::string& y_label);

}  // namespace casimir::cli::detail_svg
