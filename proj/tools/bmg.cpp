#include <iostream>

#include "bmg/cli.hpp"

int main(int argc, char** argv) {
  return bmg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
