#include <iostream>

#include "logres/cli.hpp"

int main(int argc, char** argv) {
  return logres::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
