#include <iostream>
#include <string>
#include <vector>

#include "twoschur/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return twoschur::cli::run(args, std::cout, std::cerr);
}
