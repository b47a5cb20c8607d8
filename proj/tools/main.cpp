#include <iostream>

#include "cyclicpir/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cyclicpir::cli_dispatch(args, std::cout, std::cerr);
}
