#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return lietool::run(argc, argv, std::cout, std::cerr); }
