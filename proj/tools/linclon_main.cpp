#include <iostream>
#include <string>
#include <vector>

#include "linclon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return linclon::cli::run(args, std::cout, std::cerr);
}
