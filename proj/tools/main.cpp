#include <string>
#include <vector>

#include "malmquist/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return malmquist::run_cli(args);
}
