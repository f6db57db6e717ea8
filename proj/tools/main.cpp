#include <iostream>

#include "pmx_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pmx::cli::run(args, std::cout, std::cerr);
}
