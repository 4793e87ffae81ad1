#include <iostream>
#include <string>
#include <vector>

#include "eqloc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eqloc::run_cli(args, std::cout, std::cerr);
}
