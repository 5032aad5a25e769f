#include <iostream>

#include "mvprob/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mvprob::run_cli(args, std::cout, std::cerr);
}
