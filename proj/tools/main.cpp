#include <iostream>
#include <string>
#include <vector>

#include "pp8/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pp8::cli_main(args, std::cout, std::cerr);
}
