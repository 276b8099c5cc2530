#include <iostream>

#include "dfed/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dfed::run_cli(args, std::cout, std::cerr);
}
