#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return lejalab::cli::run(argc, argv, std::cerr); }
