#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ulam::cli {

struct SuiteResult {
    int checks = 0;
    int failures = 0;
    int findings = 0;  ///< reportable observations that are not tool failures
};

/// Named invariant suites behind `ulam verify --suite ...`.  Each emits one
/// JSON line per check plus a trailing summary line.  Sampling is seeded, so
/// output is reproducible.
SuiteResult run_metric_suite(int n_max, std::ostream& out);
SuiteResult run_lemma6_suite(int n_max, std::ostream& out);
SuiteResult run_lemma7_suite(int v_max, std::ostream& out);
SuiteResult run_props_suite(int n_max, std::uint64_t budget, std::ostream& out);
SuiteResult run_conjecture_suite(int n_max, std::uint64_t budget, bool allow_large,
                                 std::ostream& out);

}  // namespace ulam::cli
