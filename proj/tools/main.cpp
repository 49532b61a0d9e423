#include <iostream>
#include <string>
#include <vector>

#include "chargraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return chargraph::run_cli(args, std::cout, std::cerr);
}
