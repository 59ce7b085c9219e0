#include <iostream>

#include "rigidity/cli/commands.hpp"

int main(int argc, char** argv) { return rigidity::cli::run(argc, argv, std::cout, std::cerr); }
