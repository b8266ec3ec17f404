#include <iostream>

#include "semicurve/cli.hpp"

int main(int argc, char** argv) { return semicurve::cli::run(argc, argv, std::cout, std::cerr); }
