#include <iostream>

#include "hurwitzkit/cli.hpp"

int main(int argc, char** argv) { return hurwitzkit::cli::run(argc, argv, std::cout, std::cerr); }
