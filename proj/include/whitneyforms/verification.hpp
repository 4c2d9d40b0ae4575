#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <whitneyforms/json_io.hpp>

namespace whitneyforms {

struct CheckResult {
    std::string name;
    bool applicable = true;
    bool passed = true;
    std::string detail;
    Json counterexample; // null unless the check failed
};

struct CellReport {
    int n = 0;
    int k = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

struct VerifyOptions {
    int samples = 20;
    std::uint64_t seed = 0;
};

// Runs every exact check for one (n, k): dimension identity, constant
// pullbacks, R W = identity, characterization = Whitney, kernel triviality
// and proof-trace completeness.
CellReport verify_cell(int n, int k, const VerifyOptions &options);

// All cells with 1 <= n <= n_max (restricted to one k when k >= 0), in
// (n, k) order. Cells are evaluated concurrently.
std::vector<CellReport> verify_range(int n_max, int k, const VerifyOptions &options);

Json report_to_json(const CellReport &report);

} // namespace whitneyforms
