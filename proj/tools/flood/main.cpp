#include <iostream>

#include "flood_tools/cli.hpp"

int main(int argc, char** argv) { return flood::tools::run_cli(argc, argv, std::cout, std::cerr); }
