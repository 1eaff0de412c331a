#include <iostream>

#include "mids/cli.hpp"

int main(int argc, char** argv) { return mids::cli::run(argc, argv, std::cout, std::cerr); }
