#include "hamel/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return hamel::cli::dispatch(argc, argv, std::cout, std::cerr);
}
