#pragma once

#include <string>
#include <vector>

namespace bisetkit {

class Context;

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full acceptance suite; exact arithmetic, tolerance zero.
std::vector<CriterionResult> run_acceptance(Context& ctx);

}  // namespace bisetkit
