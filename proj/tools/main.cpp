#include <iostream>

#include "orbiloop/cli.hpp"

int main(int argc, char** argv) {
  return orbiloop::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
