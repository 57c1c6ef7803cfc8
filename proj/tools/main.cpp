#include <iostream>
#include <string>
#include <vector>

#include "svir/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return svir::run_command(args, std::cout, std::cerr);
}
