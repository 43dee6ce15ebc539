#include <iostream>

#include "balloon/cli.hpp"

int main(int argc, char** argv) { return balloon::cli::run(argc, argv, std::cout, std::cerr); }
