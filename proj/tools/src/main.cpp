#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return prime_scope::cli::run(argc, argv, std::cout, std::cerr); }
