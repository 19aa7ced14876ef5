#include <iostream>

#include "monodec/cli.hpp"

int main(int argc, char** argv) {
  return monodec::run_cli(argc, argv, std::cout, std::cerr);
}
