#include <iostream>

#include "centropy/cli.hpp"

int main(int argc, char** argv) { return centropy::cli::run(argc, argv, std::cout, std::cerr); }
