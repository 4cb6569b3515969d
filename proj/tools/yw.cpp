#include <iostream>

#include "yw/cli.hpp"

int main(int argc, char** argv) { return yw::run(argc, argv, std::cout, std::cerr); }
