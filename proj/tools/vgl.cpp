#include <iostream>

#include "vgl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vgl::cli::main_entry(args, std::cout, std::cerr);
}
