#pragma once

#include <string>
#include <vector>

namespace schroq {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample or error, if any
};

/// Names of every acceptance check, in run order.
std::vector<std::string> acceptance_names();

/// Run the acceptance suite; only checks whose name contains filter are
/// executed (empty filter runs everything). Exceptions are caught and
/// reported as failures.
std::vector<CheckResult> acceptance_checks(const std::string& filter = "");

} // namespace schroq
