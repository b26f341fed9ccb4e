#include <iostream>
#include <string>
#include <vector>

#include "dessinforge/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dessinforge::run_cli(std::move(args), std::cout, std::cerr);
}
