#include <iostream>

#include "nestsub/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nestsub::run_cli(args, std::cout, std::cerr);
}
