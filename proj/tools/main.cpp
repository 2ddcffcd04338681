#include "lacunary/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return lacunary::cli_main({argv + 1, argv + argc}, std::cout, std::cerr);
}
