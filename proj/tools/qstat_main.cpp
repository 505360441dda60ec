#include <iostream>

#include "qstat/cli.hpp"

int main(int argc, char** argv) {
  return qstat::cli::run(argc, argv, std::cout, std::cerr);
}
