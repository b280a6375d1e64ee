#include "pencil/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return pencil::run_cli(argc, argv, std::cout, std::cerr);
}
