#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace zpg {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = true;
    long long cases = 0;
    double seconds = 0;
    std::string note;               // short human-readable summary
    nlohmann::json counterexample;  // first failure, null when passing
};

// Suites: rings, modules, groups, schur, measure, all.
std::vector<CheckResult> run_suite(const std::string& suite);
std::vector<std::string> suite_names();
nlohmann::json to_json(const CheckResult& r);

}  // namespace zpg
