#include <iostream>
#include <string>
#include <vector>

#include "mulp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mulp::cli::run(args, std::cout, std::cerr, std::cin);
}
