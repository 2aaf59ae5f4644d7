#include <iostream>

#include "ldc/cli.hpp"

int main(int argc, char** argv) { return ldc::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
