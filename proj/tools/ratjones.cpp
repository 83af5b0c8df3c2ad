#include <iostream>
#include <string>
#include <vector>

#include "ratjones/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ratjones::cli::main_entry(args, std::cout, std::cerr);
}
