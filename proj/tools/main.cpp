#include <iostream>

#include "vtypes/cli.hpp"

int main(int argc, char** argv) {
  return vtypes::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
