#include <iostream>

#include "qar/cli.hpp"

int main(int argc, char** argv) { return qar::cli::main_entry(argc, argv, std::cout, std::cerr); }
