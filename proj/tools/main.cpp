#include <iostream>

#include "skit/cli.hpp"

int main(int argc, char** argv) {
  return skit::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
