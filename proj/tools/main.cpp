#include <iostream>

#include "genbern/cli.hpp"

int main(int argc, char** argv) { return genbern::run_cli(argc, argv, std::cout, std::cerr); }
