#include <iostream>
#include <string>
#include <vector>

#include "steering/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return steering::cli::run(std::move(args), std::cout, std::cerr);
}
