#include <iostream>

#include "bandharvest/cli.hpp"

int main(int argc, char **argv) {
  return bandharvest::cli::run_cli(argc, argv, std::cout, std::cerr);
}
