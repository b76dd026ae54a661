#include <iostream>

#include "tropical/cli.hpp"

int main(int argc, char** argv) { return tropical::cli::main(argc, argv, std::cout, std::cerr); }
