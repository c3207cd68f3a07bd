#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return lat2red::cli::run_cli(argc, argv, std::cout, std::cerr);
}
