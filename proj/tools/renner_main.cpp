#include <iostream>
#include <string>
#include <vector>

#include "renner/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return renner::run(args, std::cout, std::cerr);
}
