#include "mre/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return mre::cli_main(argc, argv, std::cout, std::cerr);
}
