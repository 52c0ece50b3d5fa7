#include <iostream>

#include "dtcert/cli.hpp"

int main(int argc, char** argv) {
  return dtcert::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
