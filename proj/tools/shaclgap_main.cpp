#include "shaclgap/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return shaclgap::cli::run(argc, argv, std::cout, std::cerr);
}
