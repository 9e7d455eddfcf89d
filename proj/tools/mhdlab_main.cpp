#include <iostream>
#include <string>
#include <vector>

#include "mhdlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return mhdlab::cli::run(args, std::cout, std::cerr);
}
