#include <iostream>
#include <string>
#include <vector>

#include "bess/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bess::run_command(args, std::cout, std::cerr);
}
