#include "mwrc/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return mwrc::cli::main_entry(argc, argv, std::cout, std::cerr);
}
