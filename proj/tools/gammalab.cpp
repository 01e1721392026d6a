#include <iostream>

#include "gammalab/cli.hpp"

int main(int argc, char** argv) {
    return gammalab::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
