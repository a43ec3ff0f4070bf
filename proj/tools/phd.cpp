#include <iostream>

#include "phd/cli.hpp"

int main(int argc, char** argv) {
  return phd::cli::run(argc, argv, std::cout, std::cerr);
}
