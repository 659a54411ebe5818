#include <iostream>

#include "xihd/cli.hpp"

int main(int argc, char** argv) { return xihd::run_cli(argc, argv, std::cout, std::cerr); }
