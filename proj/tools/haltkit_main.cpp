#include <iostream>

#include "haltkit/cli.hpp"

int main(int argc, char** argv) {
    return haltkit::run_cli(argc, argv, std::cout, std::cerr);
}
