#include <iostream>

#include "maxswp_cli/commands.hpp"

int main(int argc, char** argv) { return maxswp::cli::run(argc, argv, std::cout, std::cerr); }
