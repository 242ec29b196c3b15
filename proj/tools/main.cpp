#include <iostream>

#include "swapsensus/cli.hpp"

int main(int argc, char** argv)
{
    return swapsensus::cli::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
