#include <iostream>

#include "replika/harness.hpp"

int main(int argc, char** argv) { return replika::harness::run(argc, argv, std::cout, std::cerr); }
