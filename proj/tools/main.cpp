#include <iostream>
#include <string>
#include <vector>

#include "rslist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rslist::run_cli(args, std::cout, std::cerr);
}
