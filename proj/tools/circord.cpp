#include <iostream>

#include "circord/cli.hpp"

int main(int argc, char** argv) { return circord::run_cli(argc, argv, std::cout, std::cerr); }
