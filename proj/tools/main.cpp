#include <iostream>

#include "taugen/cli.hpp"

int main(int argc, char** argv) { return taugen::run_cli(argc, argv, std::cout, std::cerr); }
