#include <iostream>

#include "equicolor/cli.hpp"

int main(int argc, char** argv) { return equicolor::cli::run(argc, argv, std::cout, std::cerr); }
