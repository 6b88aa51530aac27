#include <iostream>

#include "kzdisk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kzdisk::run_cli(args, std::cout, std::cerr);
}
