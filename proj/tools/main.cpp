#include <iostream>

#include "tcore/cli.hpp"

int main(int argc, char** argv) {
    return tcore::cli::run(argc, argv, std::cout, std::cerr);
}
