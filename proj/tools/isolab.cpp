#include <iostream>
#include <string>
#include <vector>

#include "isolab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return isolab::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
