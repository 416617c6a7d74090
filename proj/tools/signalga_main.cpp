#include "signalga/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return signalga::cli_main(args, std::cout, std::cerr);
}
