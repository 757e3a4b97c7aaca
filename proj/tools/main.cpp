#include <iostream>
#include <string>
#include <vector>

#include "varregion/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return varregion::run_cli(args, std::cout, std::cerr);
}
