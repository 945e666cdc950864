#include <iostream>

#include "prmhull/cli.hpp"

int main(int argc, char** argv) {
  return prmhull::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
