// Acceptance gate: one line per criterion, runtime limits included in the
// verdict. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "prime_scope/suite/acceptance.hpp"

using namespace prime_scope;

int main(int argc, char** argv)
{
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i)
        ids.push_back(std::atoi(argv[i]));
    suite::SuiteOptions options;
    bool all_passed = true;
    std::vector<suite::CriterionResult> first;
    for (const suite::CriterionInfo& c : suite::criteria()) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end())
            continue;
        suite::CriterionResult r = suite::run_criterion(c.id, options);
        bool in_time = r.limit_seconds == 0 || r.seconds < r.limit_seconds;
        bool ok = r.passed && in_time;
        all_passed = all_passed && ok;
        std::printf("criterion %2d: %s  %-34s %7.2f s (limit %.0f s)  %s\n", r.id, ok ? "PASS" : "FAIL",
                    r.name.c_str(), r.seconds, r.limit_seconds, r.metrics.dump().c_str());
        std::fflush(stdout);
        first.push_back(std::move(r));
    }
    if (ids.empty() || std::find(ids.begin(), ids.end(), 11) != ids.end()) {
        // criterion 11: a second run must reproduce the transcript byte for byte
        std::vector<int> again;
        for (const auto& r : first)
            again.push_back(r.id);
        std::string a = suite::transcript(first, options).dump(2);
        std::string b = suite::transcript(suite::run_all(options, again), options).dump(2);
        bool ok = a == b;
        all_passed = all_passed && ok;
        std::printf("criterion 11: %s  %-34s transcript bytes %zu\n", ok ? "PASS" : "FAIL", "determinism", a.size());
    }
    return all_passed ? 0 : 1;
}
