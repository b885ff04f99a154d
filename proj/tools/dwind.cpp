#include <iostream>
#include <string>
#include <vector>

#include "dwind/cli/run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dwind::cli::run(args, std::cout, std::cerr);
}
