#include "cli.hpp"

int main(int argc, char** argv) { return weylres::cli::run(argc, argv, std::cout, std::cerr); }
