#include <iostream>

#include "raising/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return raising::run_cli(args, std::cout, std::cerr);
}
