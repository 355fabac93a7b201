#include <iostream>
#include <string>
#include <vector>

#include "sqpaint/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return sqpaint::run_cli(args, std::cout, std::cerr);
}
