#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rydnet::acceptance {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
};

inline constexpr int kCriterionCount = 12;

/// Runs one criterion (1-based id).
CriterionResult run_criterion(int id);

/// Runs the whole suite in order.
std::vector<CriterionResult> run_all();

/// Prints one pass/fail line per criterion; returns true iff all passed.
bool report(std::ostream& out, const std::vector<CriterionResult>& results);

} // namespace rydnet::acceptance
