#include "cli.hh"

#include <iostream>

auto main(int argc, char ** argv) -> int
{
    return homlab::cli::run(argc, argv, std::cout, std::cerr);
}
