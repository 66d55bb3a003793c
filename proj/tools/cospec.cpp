#include <iostream>

#include "cospec/cli.hpp"

int main(int argc, char** argv) { return cospec::cli::run(argc, argv, std::cout, std::cerr, std::cin); }
