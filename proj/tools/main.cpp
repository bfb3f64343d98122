#include <iostream>
#include <string>
#include <vector>

#include "gdecomp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gdecomp::dispatch(args, std::cout, std::cerr);
}
