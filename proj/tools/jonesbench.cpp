#include <iostream>

#include "jones/harness.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return jones::run_cli(args, std::cout, std::cerr);
}
