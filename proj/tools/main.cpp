#include <iostream>
#include <vector>

#include "gaugetop/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gaugetop::run_cli(std::move(args), std::cout, std::cerr);
}
