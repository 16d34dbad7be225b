#include <iostream>

#include "typetwo/cli.hpp"

int main(int argc, char** argv) { return typetwo::run_cli(argc, argv, std::cout, std::cerr); }
