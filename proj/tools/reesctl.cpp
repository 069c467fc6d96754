#include <iostream>

#include "rees/cli/commands.hpp"

int main(int argc, char** argv) { return rees::cli::run_cli(argc, argv, std::cout, std::cerr); }
