#include <iostream>

#include "esz/cli.hpp"

int main(int argc, char** argv) {
  return esz::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
