#include "kolchin/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return kolchin::cli::run_command(argc, argv, std::cout, std::cerr);
}
