#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "cli.hpp"

int main(int argc, char** argv) {
    const bool color = std::getenv("MODULISLOPE_NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    return modulislope::cli::run(argc, argv, std::cout, std::cerr, color);
}
