#include <iostream>
#include <string>
#include <vector>

#include "knotpoly/cli.hpp"

int main(int argc, char** argv) {
    return knotpoly::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
