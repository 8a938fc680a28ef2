// Copyright (c) 2026 the casimir authors
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include <casimir/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return casimir::cli::cli_main(args);
}
