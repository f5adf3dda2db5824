#include <iostream>

#include "gca/cli/commands.hpp"

int main(int argc, char** argv) { return gca::cli::run(argc, argv, std::cout, std::cerr); }
