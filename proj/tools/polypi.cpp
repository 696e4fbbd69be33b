#include <iostream>

#include "polypi/cli.hpp"

int main(int argc, char** argv) {
  return polypi::cli::execute(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
