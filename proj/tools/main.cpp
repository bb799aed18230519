#include <iostream>

#include "commensurate/cli/commands.hpp"

int main(int argc, char **argv) {
  return commensurate::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
