#include <iostream>

#include "deonet/cli.hpp"

int main(int argc, char** argv) {
  return deonet::cli_main(argc, argv, std::cout, std::cerr);
}
