#include <iostream>

#include "fluxkit_cli/app.hpp"

int main(int argc, char** argv) { return fluxkit::cli::main_entry(argc, argv, std::cout, std::cerr); }
