#include <iostream>

#include "fjb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fjb::cli::run(args, std::cout, std::cerr);
}
