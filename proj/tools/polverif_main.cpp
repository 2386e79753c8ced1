#include <iostream>

#include "polverif/cli.hpp"

int main(int argc, char** argv) { return polverif::run_cli(argc, argv, std::cout, std::cerr); }
