#include <iostream>

#include "expwell/cli.hpp"

int main(int argc, char** argv) { return expwell::cli::run(argc, argv, std::cout, std::cerr); }
