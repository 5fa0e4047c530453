#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) { return foq::cli::main_entry(argc, argv, std::cout, std::cerr); }
