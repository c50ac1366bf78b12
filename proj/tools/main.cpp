#include <iostream>
#include <string>
#include <vector>

#include "kmat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kmat::run(args, std::cout, std::cerr);
}
