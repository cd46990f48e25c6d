#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncalc {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

}  // namespace ncalc
