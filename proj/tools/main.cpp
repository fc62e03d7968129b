#include <cstdio>
#include <string>
#include <vector>

#include "grlpa/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    grlpa::CliResult result = grlpa::cli_run(args);
    std::fputs(result.output.c_str(), result.exit_code == 2 ? stderr : stdout);
    return result.exit_code;
}
