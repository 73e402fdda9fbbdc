#pragma once

// Verification suites behind `coloreul verify <suite>`. Each suite returns
// its check count, failure witnesses as JSON, and suite-specific details.

#include <cstdint>
#include <string>
#include <vector>

#include "coloreul/json_io.hpp"
#include "coloreul/limits.hpp"

namespace coloreul::cli {

struct SuiteConfig {
    int r = 2;
    int n = 2;
    std::vector<int> j_values;
    std::vector<int> k_values;
    std::uint64_t seed = 0;
    int cases = 100;
    unsigned jobs = 1;
    Limits limits;
};

struct SuiteOutcome {
    std::uint64_t checks = 0;
    std::uint64_t failure_count = 0;
    Json failures = Json::array();  // first few witnesses
    Json details = Json::object();
    bool passed() const { return failure_count == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteOutcome run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace coloreul::cli
