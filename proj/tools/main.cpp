#include <iostream>

#include "torusplit_cli/commands.hpp"

int main(int argc, char** argv) {
  return torusplit::cli::run(argc, argv, std::cout, std::cerr);
}
