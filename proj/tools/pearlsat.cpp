// SPDX-License-Identifier: Apache-2.0
#include "pearlsat/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pearlsat::cli::run(args, std::cout, std::cerr);
}
