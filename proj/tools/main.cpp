#include <iostream>

#include "llt/cli.hpp"

int main(int argc, char** argv) { return llt::run_cli(argc, argv, std::cout, std::cerr, std::cin); }
