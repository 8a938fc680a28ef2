// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>

#include <casimir/cli.hpp>

namespace casimir::cli {

OpticalTable ingest_optical_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableValidationError("cannot open optical table file '" + path + "'");

  std::vector<OpticalRow> rows;
  std::vector<long> row_lines;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    double omega = 0.0, eps2 = 0.0;
    std::string extra;
    if (!(fields >> omega >> eps2) || (fields >> extra))
      throw TableValidationError(path + " line " + std::to_string(line_no) +
                                     ": expected two columns (omega [rad/s], eps'')",
                                 line_no);
    if (!(omega > 0.0))
      throw TableValidationError(path + " line " + std::to_string(line_no) +
                                     ": omega must be positive",
                                 line_no);
    if (eps2 < 0.0)
      throw TableValidationError(path + " line " + std::to_string(line_no) +
                                     ": eps'' must be >= 0",
                                 line_no);
    if (!rows.empty() && !(omega > rows.back().omega))
      throw TableValidationError(path + " line " + std::to_string(line_no) +
                                     ": omega must be strictly increasing",
                                 line_no);
    rows.push_back({omega, eps2});
    row_lines.push_back(line_no);
  }
  if (rows.size() < 8)
    throw TableValidationError(path + ": optical table needs at least 8 rows, got " +
                               std::to_string(rows.size()));

  OpticalTable table = OpticalTable::from_rows(std::move(rows));
  std::cerr << "casimir: optical table '" << path << "': " << table.rows().size()
            << " rows, omega in [" << table.omega_min() << ", " << table.omega_max()
            << "] rad/s\n";
  return table;
}

}  // namespace casimir::cli
