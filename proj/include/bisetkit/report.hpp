#pragma once

#include <string>
#include <vector>

#include "bisetkit/perm_group.hpp"

namespace bisetkit {

class Context;

struct ReportFact {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct A5Report {
    bool ok = false;
    std::vector<ReportFact> facts;
};

/// Verifies the evaluation-level facts of the A5 analysis: the A4 standard
/// module facts, the filtration multiplicities via the decomposition matrix,
/// the A5 evaluations, and the infinite-global-dimension witness.
A5Report a5_report(Context& ctx);

std::string a5_report_json(const A5Report& r);

/// {group, vanishing_table, decomposition_matrix, cartan_matrix, ext1_matrix,
///  qh: {verdict, checks[]}, witnesses[]}
std::string full_report_json(Context& ctx, const GroupPtr& g);

}  // namespace bisetkit
