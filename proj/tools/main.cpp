#include <iostream>
#include <string>
#include <vector>

#include "dcospan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dcospan::runCommand(args, std::cout, std::cerr);
}
