#include <iostream>

#include "ringkepler/cli.hpp"

int main(int argc, char** argv) { return ringkepler::cli::run(argc, argv, std::cout, std::cerr); }
