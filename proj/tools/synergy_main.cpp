#include <iostream>
#include <string>
#include <vector>

#include "synergy/app/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return synergy::app::cli_run(args, std::cout, std::cerr);
}
