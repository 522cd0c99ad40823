#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "geobohm/config.hpp"

namespace geobohm {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// One row per acceptance criterion; tolerances are fixed inside.
std::vector<CheckResult> run_validation(const RunConfig& cfg);

}  // namespace geobohm
