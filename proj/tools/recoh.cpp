#include <iostream>

#include "recoh/cli.hpp"

int main(int argc, char** argv) {
  return recoh::cli::main_entry(argc, argv, std::cout, std::cerr);
}
