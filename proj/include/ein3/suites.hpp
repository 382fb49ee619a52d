#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Named verification suites. Each suite runs seeded trials comparing a closed
// form predicate with an oracle computation and reports every disagreement.
namespace ein3::suites {

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int trial_count = 0;
    double tolerance = 0.0;
    int skipped = 0;  // trials inside a declared ambiguity band
    int failure_count = 0;
    std::vector<std::string> failures;  // first few messages only
    double max_violation = 0.0;

    bool passed() const { return failure_count == 0; }
};

struct SuiteInfo {
    std::string name;
    int default_trials;
    std::string summary;
};

const std::vector<SuiteInfo>& suite_list();

// trials <= 0 selects the suite's default. Throws std::invalid_argument for an
// unknown name.
SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed);

}  // namespace ein3::suites
