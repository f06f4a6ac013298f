#pragma once

#include "ncforms/liecomplex.hpp"
#include "ncforms/qspace.hpp"
#include "ncforms/randomgen.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ncforms {

struct CheckResult {
    std::string name; // "group/detail", the prefix keys acceptance criteria
    int cases = 0;
    std::vector<std::string> failures; // rendered counterexamples, capped
    bool ok() const { return failures.empty(); }
};

struct SuiteResult {
    std::string suite;
    uint64_t seed = 0;
    int cases = 0;
    int max_deg = 0;
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto &c : checks)
            if (!c.ok()) return false;
        return true;
    }
};

std::vector<std::string> suite_names();

/// Runs one of the named property suites with the given budget.
SuiteResult run_suite(const std::string &name, uint64_t seed, int cases, int max_deg);

/// The engineered non-confluent demo system (overlapping square and
/// commutator); check_local_confluence must report its minimal overlap.
RewriteSystem broken_demo_system();

} // namespace ncforms
