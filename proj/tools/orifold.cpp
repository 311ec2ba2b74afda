#include <iostream>

#include "orifold/cli.hpp"

int main(int argc, char** argv) { return orifold::cli::run(argc, argv, std::cout, std::cerr); }
