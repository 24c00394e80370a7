#include <iostream>

#include "omni/cli.hpp"

int main(int argc, char** argv) {
  return omni::cli::run(argc, argv, std::cout, std::cerr);
}
