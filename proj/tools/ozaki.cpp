#include <iostream>
#include <string>
#include <vector>

#include "ozaki/app.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return ozaki::app::run(args, std::cout, std::cerr);
}
