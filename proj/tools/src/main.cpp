#include <iostream>

#include "pmass/cli.hpp"

int main(int argc, char** argv) { return pmass::cli::run(argc, argv, std::cout, std::cerr); }
