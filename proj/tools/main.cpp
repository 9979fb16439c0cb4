#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  return twinsieve::cli::cli_run(argc, argv, std::cout, std::cerr);
}
