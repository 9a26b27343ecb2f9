#include <iostream>
#include <string>
#include <vector>

#include "structura/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return structura::cli::run(std::move(args), std::cout, std::cerr);
}
