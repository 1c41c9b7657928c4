#pragma once

#include <string>
#include <vector>

namespace dfib {

// One named check: measured value against its tolerance.
struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    bool overall = false;
};

enum class VerifyLevel { quick, full };

// Runs the library invariant suite: published-table reproduction, Binet
// and continuous consistency, ODE and Riccati residuals, Bernoulli and
// family-potential properties, cross-engine agreement, Wronskian
// constancy, Ermakov invariant flatness, EP residuals, asymptotics and
// fade measurements. quick uses coarse grids, full the reference grids.
// w_norm scales the second deformed solution everywhere it enters.
VerifyReport run_verification(VerifyLevel level, double w_norm, double x0);
VerifyReport run_verification(VerifyLevel level);

// Fixed-format text rendering (byte-identical for identical reports).
std::string format_report(const VerifyReport& r);
std::string to_json(const VerifyReport& r);

}  // namespace dfib
