#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return xlap::cli::main_args(argc, argv, std::cout, std::cerr); }
