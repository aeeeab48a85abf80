#include <iostream>

#include "cliquemdl/cli.hpp"

int main(int argc, char** argv) { return cliquemdl::cli::run(argc, argv, std::cout, std::cerr); }
