#include "sltk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sltk::cli::dispatch(argc, argv, std::cin, std::cout, std::cerr); }
