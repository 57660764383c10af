#include <iostream>

#include "lzscan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lzscan::cli_main(args, std::cout, std::cerr);
}
