#include <iostream>

#include "gtrim/cli.hpp"

int main(int argc, char** argv) {
  try {
    return gtrim::run_cli(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "gtrim: internal error: " << e.what() << "\n";
    return 1;
  }
}
