#include <iostream>
#include <string>
#include <vector>

#include "hog/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hog::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
