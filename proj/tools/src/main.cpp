#include <iostream>

#include "dop/cli/app.hpp"

int main(int argc, char** argv) {
  return dop::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
