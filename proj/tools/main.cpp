#include <iostream>

#include "coarsedim/cli.hpp"

int main(int argc, char** argv) { return coarsedim::runMain(argc, argv, std::cout, std::cerr); }
