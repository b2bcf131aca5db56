// ============================================================================
// symdil_main.cpp -- executable entry point; all logic lives in cli_main so
// the tests can drive the CLI in-process
// ============================================================================
#include <iostream>
#include <string>
#include <vector>

#include "symdil/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return symdil::cli_main(std::move(args), std::cout, std::cerr);
}
