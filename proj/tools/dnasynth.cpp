#include <iostream>

#include "dnasynth/cli.hpp"

int main(int argc, char** argv) { return dnasynth::cli::run(argc, argv, std::cout, std::cerr); }
