#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncalc/io.hpp"

namespace ncalc {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string counterexample;   // empty when passed
    double millis = 0;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    bool small = false;   // fewer random samples, same identities
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 1;
    std::vector<CheckResult> checks;
    bool passed() const;
};

std::vector<std::string> suite_names();
// "all" runs every module suite; throws std::invalid_argument for unknown names
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);
Json report_json(const SuiteReport& r);

}  // namespace ncalc
