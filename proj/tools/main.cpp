#include <iostream>

#include "fractops/cli.hpp"

int main(int argc, char** argv) { return fractops::run_cli(argc, argv, std::cout, std::cerr); }
