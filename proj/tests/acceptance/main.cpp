#include <cstring>
#include <iostream>

#include "malmquist/acceptance.hpp"

int main(int argc, char** argv) {
    malmquist::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
    }
    const auto results = malmquist::run_acceptance(opt, std::cout);
    return malmquist::all_pass(results) ? 0 : 1;
}
