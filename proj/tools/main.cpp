#include <iostream>

#include "coxinv/cli.hpp"

int main(int argc, char** argv) { return coxinv::run(argc, argv, std::cout, std::cerr); }
