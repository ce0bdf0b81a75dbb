#include <iostream>
#include <vector>

#include "chrank/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return chrank::run_cli(args, std::cout, std::cerr);
}
