#include <iostream>

#include "lapcoef/cli.hpp"

int main(int argc, char** argv) { return lapcoef::cli::run(argc, argv, std::cout, std::cerr); }
