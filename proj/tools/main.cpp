#include "hqm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hqm::cli::main(argc, argv, std::cout, std::cerr); }
