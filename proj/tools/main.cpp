#include <iostream>

#include "machin/cli.hpp"

int main(int argc, char** argv) { return machin::run({argv + 1, argv + argc}, std::cout, std::cerr); }
