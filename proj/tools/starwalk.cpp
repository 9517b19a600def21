#include <iostream>

#include "starwalk/cli.hpp"

int main(int argc, char** argv) { return starwalk::run_cli(argc, argv, std::cout, std::cerr); }
