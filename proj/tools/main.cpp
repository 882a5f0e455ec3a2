#include <iostream>
#include <string>
#include <vector>

#include "cct/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cct::run_cli(args, std::cout, std::cerr);
}
