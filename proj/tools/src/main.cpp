#include <iostream>

#include "sfinv/cli/app.hpp"

int main(int argc, char** argv) { return sfinv::cli::run(argc, argv, std::cout, std::cerr); }
