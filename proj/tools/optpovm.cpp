#include <iostream>
#include <string>
#include <vector>

#include "optpovm/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return optpovm::cli::run(args, std::cout, std::cerr);
}
