#include "hv/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = hv::cli::run_command(args);
    std::cout << result.out;
    if (!result.err.empty()) std::cerr << result.err;
    return result.exit_code;
}
