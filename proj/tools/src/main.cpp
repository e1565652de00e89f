#include <iostream>

#include "ruled/cli/app.hpp"

int main(int argc, char** argv) { return ruled::cli::run(argc, argv, std::cout, std::cerr); }
