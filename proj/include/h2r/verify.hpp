#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace h2r {

struct CheckResult {
    std::string name;
    bool passed = false;
    double measure = 0.0;    // what was observed (residual, error, ratio)
    double tolerance = 0.0;  // the bound it was held to (0 for exact predicates)
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Randomized spot checks are driven by the seed; tolerances scale by
// tol_scale (the CLI wires H2R_TOL through here).
SuiteReport run_geometry_suite(std::uint64_t seed, double tol_scale = 1.0);
SuiteReport run_jacobi_suite(std::uint64_t seed, double tol_scale = 1.0);
SuiteReport run_bvp_suite(std::uint64_t seed, double tol_scale = 1.0);

std::string report_json(const std::vector<SuiteReport>& reports);

}  // namespace h2r
