#include <iostream>

#include <lnd/cli.hpp>

int main(int argc, char** argv)
{
    return lnd::cli::run(argc, argv, std::cout, std::cerr);
}
