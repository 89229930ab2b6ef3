#include <isobaric/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return isobaric::cli::run(argc, argv, std::cout, std::cerr); }
