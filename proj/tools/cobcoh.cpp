#include <iostream>
#include <string>
#include <vector>

#include "cobcoh/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cobcoh::run(args, std::cout, std::cerr);
}
