#include "dqm/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return dqm::cli::run(argc, argv, std::cout, std::cerr);
}
