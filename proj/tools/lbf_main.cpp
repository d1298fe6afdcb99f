#include <lbf/cli.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char ** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = lbf::cli::run(args);
    std::cout << result.output;
    return result.exit_code;
}
