#include <iostream>
#include <string>
#include <vector>

#include "cluster_roots/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cluster_roots::run_cli(args, std::cout, std::cerr);
}
