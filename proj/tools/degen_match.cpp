#include <iostream>

#include "degen/cli.hpp"

int main(int argc, char** argv) {
  return degen::cli::main(argc, argv, std::cin, std::cout, std::cerr);
}
