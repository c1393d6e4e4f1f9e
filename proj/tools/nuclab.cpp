#include "nuclab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return nuclab::run_cli(argc, argv, std::cout, std::cerr); }
