#include <iostream>

#include "tangles/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tangles::run(args, std::cout, std::cerr);
}
