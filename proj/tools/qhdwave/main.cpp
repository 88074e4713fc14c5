#include <iostream>
#include <string>
#include <vector>

#include "qhd/cli/run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qhd::cli::run_main(args, std::cout, std::cerr);
}
