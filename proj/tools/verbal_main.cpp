#include <iostream>
#include <vector>

#include "verbal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return verbal::run_cli(args, std::cout, std::cerr);
}
