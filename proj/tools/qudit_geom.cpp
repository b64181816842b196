#include <iostream>

#include "qudit/cli.hpp"

int main(int argc, char** argv) { return qudit::cli::run(argc, argv, std::cout, std::cerr); }
