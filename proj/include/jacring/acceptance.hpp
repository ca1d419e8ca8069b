#pragma once

#include <string>
#include <vector>

namespace jacring {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // deterministic, no timings
};

// Criteria 1-8 of the release gate, exact checks plus runtime budgets.
std::vector<CriterionResult> run_criteria_1_8();

// Deterministic JSON rendering of a criteria list (sorted keys).
std::string render_criteria_json(const std::vector<CriterionResult>& results);

// All nine criteria; the ninth re-runs 1-8 twice and compares the rendered
// JSON byte for byte.
std::vector<CriterionResult> run_acceptance();

}  // namespace jacring
