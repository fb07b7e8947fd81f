#include <iostream>
#include <vector>

#include "dyngal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dyngal::cli::run(args, std::cout, std::cerr);
}
