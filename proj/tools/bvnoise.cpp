#include <iostream>

#include "bvnoise/cli.hpp"

int main(int argc, char** argv) { return bvnoise::run_cli(argc, argv, std::cout, std::cerr); }
