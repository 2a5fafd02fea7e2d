#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sphvec/vec3.hpp"

namespace sphvec {

/// Outcome of one named check from the `paper-check` reproducibility suite.
struct CheckResult {
    std::string name;
    bool passed = false;
    /// Largest componentwise deviation seen by the case; 0 for checks whose
    /// outcome is a required exception.
    double max_error = 0.0;
    /// Failure detail; empty on success.
    std::string message;
};

struct CheckReport {
    double tolerance = kEqualTol;
    std::vector<CheckResult> results;

    bool all_passed() const;
    std::size_t passed_count() const;
};

/// Runs every registered worked-value check at the given tolerance. Each
/// case exercises one library entry point against a fixed expected value;
/// the case list is append-only and its names are frozen by the tests.
CheckReport run_paper_check(double tolerance = kEqualTol);

/// Names of all registered checks, in execution order.
std::vector<std::string> paper_check_names();

/// One "PASS name" / "FAIL name (detail)" line per case plus a summary line.
std::string report_to_text(const CheckReport& report);

/// {tolerance, total, passed, failed, cases: [{name, passed, max_error,
///  message}]} with stable key order.
nlohmann::ordered_json report_to_json(const CheckReport& report);

} // namespace sphvec
