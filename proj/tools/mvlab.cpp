#include <iostream>
#include <string>
#include <vector>

#include "mvlab/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return mvlab::cli::run(args, std::cout, std::cerr);
}
