#include <iostream>

#include "sspsat/cli.hpp"

int main(int argc, char** argv) { return sspsat::run_cli(argc, argv, std::cout, std::cerr); }
