#include <iostream>

#include "svcrate/cli.hpp"

int main(int argc, char** argv)
{
    return svcrate::cli::run_cli(argc, argv, std::cout, std::cerr);
}
