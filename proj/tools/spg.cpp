#include <iostream>

#include "spg/cli/Cli.h"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return spg::cli::runMain(argc, argv, std::cout, std::cerr);
}
