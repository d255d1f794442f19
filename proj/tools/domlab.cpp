#include "domlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return domlab::cli::run(argc, argv, std::cout, std::cerr);
}
