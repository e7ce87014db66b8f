#include <iostream>

#include "drckit/cli.hpp"

int main(int argc, char** argv) { return drckit::cli_main(argc, argv, std::cout, std::cerr); }
