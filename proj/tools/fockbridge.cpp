#include <iostream>

#include "fockbridge/cli.hpp"

int main(int argc, char** argv) { return fockbridge::run_cli(argc, argv, std::cout, std::cerr); }
