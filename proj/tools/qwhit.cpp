#include <iostream>

#include "qwhit/cli/cli.hpp"

int main(int argc, char** argv) { return qwhit::run_cli(argc, argv, std::cout, std::cerr); }
