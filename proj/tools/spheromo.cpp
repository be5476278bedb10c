#include "spheromo/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return spheromo::run_cli(argc, argv, std::cout, std::cerr); }
