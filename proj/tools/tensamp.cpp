#include <iostream>

#include "tensamp/cli/commands.hpp"

int main(int argc, char** argv) { return tensamp::run_cli(argc, argv, std::cout, std::cerr); }
