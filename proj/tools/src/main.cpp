#include <iostream>

#include "pisot_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pisot::cli::run(args, std::cout, std::cerr);
}
