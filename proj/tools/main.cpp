#include <iostream>
#include <vector>

#include "bohr/cli_runner.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bohr::cli::run(std::move(args), std::cout, std::cerr);
}
