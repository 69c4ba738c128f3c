#include <iostream>
#include <string>
#include <vector>

#include "blbetti/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return blbetti::cli::run(args, std::cout, std::cerr);
}
