#include <iostream>
#include <string>
#include <vector>

#include "bgwc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return bgwc::cli::main(args, std::cout, std::cerr);
}
