#include <iostream>
#include <string>
#include <vector>

#include "ek7/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ek7::run_cli(args, std::cout, std::cerr);
}
