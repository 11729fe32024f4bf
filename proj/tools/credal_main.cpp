#include <iostream>
#include <string>
#include <vector>

#include "credal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return credal::cli::run(args, std::cout, std::cerr);
}
