#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prime_scope/io/json.hpp"

namespace prime_scope::suite {

struct SuiteOptions {
    std::uint64_t seed = 0;
    long height_bound = 1000;
    unsigned precision_cap = 1000;
};

struct CriterionInfo {
    int id = 0;
    std::string name;
    double limit_seconds = 0; // 0: no runtime limit
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    io::Json metrics;
    double seconds = 0;
    double limit_seconds = 0;
};

/// Criteria 1..10; determinism (11) compares whole transcripts and is run by
/// the caller.
const std::vector<CriterionInfo>& criteria();

CriterionResult run_criterion(int id, const SuiteOptions& options);
std::vector<CriterionResult> run_all(const SuiteOptions& options, const std::vector<int>& ids = {});

/// Deterministic record of a run: everything but the timings.
io::Json transcript(const std::vector<CriterionResult>& results, const SuiteOptions& options);

} // namespace prime_scope::suite
