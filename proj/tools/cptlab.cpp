#include <iostream>

#include "cptlab/frontend/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cptlab::frontend::run_cli(args, std::cout, std::cerr);
}
