#pragma once
#include <string>
#include <vector>

namespace ringradiant {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0;   // measured quantity
    double threshold = 0;  // bound it is held against
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Named invariant suites: wave, extension, wallis, cancellation, power,
/// thermal, or all. Throws std::invalid_argument for unknown names.
VerifyReport run_verify(const std::string& suite);

/// One line per check: [PASS|FAIL] name residual=... threshold=...
std::string format_report(const VerifyReport& report);

}  // namespace ringradiant
