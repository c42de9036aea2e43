#include <iostream>
#include <string>
#include <vector>

#include "walks/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return walks::cli::run(args, std::cout, std::cerr);
}
