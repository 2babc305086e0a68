#include <iostream>

#include "plethys/cli.hpp"

int main(int argc, char** argv) { return plethys::cli::run_cli(argc, argv, std::cout, std::cerr); }
