#include <iostream>

#include "rctrs/cli.hpp"

int main(int argc, char** argv) {
  return rctrs::cli_main(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
