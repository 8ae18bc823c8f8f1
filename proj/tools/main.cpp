#include <iostream>
#include <string>
#include <vector>

#include "mpcq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mpcq::run_cli(args, std::cout, std::cerr);
}
