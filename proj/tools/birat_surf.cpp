#include <iostream>

#include "birat/cli.hpp"

int main(int argc, char** argv) { return birat::run_cli(argc, argv, std::cout, std::cerr); }
