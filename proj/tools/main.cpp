#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pgrowth::cli::main_entry(argc, argv, std::cout, std::cerr); }
