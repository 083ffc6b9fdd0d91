#include <iostream>

#include "dofb/cli.hpp"

int main(int argc, char** argv) { return dofb::cli::run(argc, argv, std::cout, std::cerr); }
