#include <iostream>

#include "ontoforge/cli/commands.hpp"

int main(int argc, char** argv) {
  return ontoforge::cli::run_main(argc, argv, std::cout, std::cerr);
}
