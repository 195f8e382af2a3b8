#include <iostream>

#include "nesto/cli.hpp"

int main(int argc, char** argv) {
  return nesto::run_cli(argc, argv, std::cin, std::cout);
}
