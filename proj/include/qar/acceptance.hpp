// acceptance.hpp - Executable acceptance checks, one per criterion

#pragma once

#include <string>
#include <vector>

#include "qar/model.hpp"

namespace qar::acceptance {

inline constexpr int kCriterionCount = 10;

struct CriterionResult {
    int id{0};
    std::string title;
    bool passed{false};
    std::string detail;
};

// Figure-caption parameter sets.
model::FridgeParams fig1_params();   // Ec=1, eta=1, T=(1,5,10), p=0.1, g=0.01
model::FridgeParams fig2_params();   // Ec=1, eta=0.5, T=(1,2,10), p=0.05, g=0.01
model::FridgeParams fig3_params();   // Ec=1, eta=0.5, T=(1,2,10), g=0.05, p=0.01
model::FridgeParams fig4_params();   // Ec=1, eta=0.5, T=(1,2,10), p=(0.01,0.02,0.05), g=0.01
model::FridgeParams theorem_params(); // Ec=1e-3, T=(1,30,900), p=1e-3, g=1e-4

// Throws InvalidInput for an id outside 1..kCriterionCount. Computation
// errors inside a check are reported as a failure, not rethrown.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

std::string format_line(const CriterionResult& r);

} // namespace qar::acceptance
