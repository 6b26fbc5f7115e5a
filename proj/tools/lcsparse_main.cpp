#include <iostream>
#include <string>
#include <vector>

#include "lcsparse/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcsparse::dispatch(args, std::cout, std::cerr);
}
