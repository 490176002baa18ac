#include <iostream>
#include <string>
#include <vector>

#include "chainops/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chainops::cli::run(std::move(args), std::cout, std::cerr);
}
