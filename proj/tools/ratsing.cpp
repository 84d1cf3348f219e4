#include <iostream>
#include <string>
#include <vector>

#include "ratsing/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ratsing::cli::run(args, std::cin, std::cout, std::cerr);
}
