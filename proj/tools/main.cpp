#include <iostream>
#include <string>
#include <vector>

#include "fgpal/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fgpal::run_cli(std::move(args), std::cout, std::cerr);
}
