#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  return chebvar::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
