#include <iostream>
#include <string>
#include <vector>

#include "hyperbetti/cli.hpp"

int main(int argc, char* argv[]) {
  std::ios::sync_with_stdio(false);
  return hyperbetti::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
