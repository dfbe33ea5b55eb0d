#include <iostream>

#include "geuler_cli.hpp"

int main(int argc, char** argv) { return geuler::cli::run(argc, argv, std::cout, std::cerr); }
