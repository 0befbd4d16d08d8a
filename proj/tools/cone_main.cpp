#include <iostream>

#include "entangle/cli/cli.hpp"

int main(int argc, char** argv) {
  return entangle::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
