#include <iostream>

#include "zdbox/cli.hpp"

int main(int argc, char** argv) { return zdbox::cli::run(argc, argv, std::cout, std::cerr); }
