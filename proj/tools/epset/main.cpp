#include <iostream>
#include <string>
#include <vector>

#include "epset/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return epset::run(args, std::cout, std::cerr);
}
