#include <iostream>
#include <string>
#include <vector>

#include "pulsebound/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pulsebound::cli::run(args, std::cout, std::cerr);
}
