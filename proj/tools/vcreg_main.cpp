#include <iostream>
#include <string>
#include <vector>

#include "vcreg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vcreg::dispatch(args, std::cout, std::cerr);
}
