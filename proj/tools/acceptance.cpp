#include <cstdio>
#include <cstdlib>
#include <string>

#include "ncalc/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
    int failed = 0;
    for (const auto& c : ncalc::run_acceptance(seed)) {
        std::printf("%s criterion %2d %s (%.2f s)", c.passed ? "PASS" : "FAIL", c.number, c.title.c_str(), c.seconds);
        if (!c.detail.empty()) std::printf(" -- %s", c.detail.c_str());
        std::printf("\n");
        failed += !c.passed;
    }
    std::fflush(stdout);
    return failed ? 1 : 0;
}
