#include <iostream>

#include "joints/cli.hpp"

int main(int argc, char** argv) {
  return joints::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
