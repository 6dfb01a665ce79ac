#include "dbound/cli.hpp"

int main(int argc, char** argv) { return dbound::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
