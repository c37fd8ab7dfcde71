#pragma once

#include <string>

#include "bisetkit/perm_group.hpp"

namespace bisetkit {

/// Human-readable isomorphism-class name: "1", "C6", "V4", "C2xC4", "S4",
/// "A5", "D8", "Q8", ... with a deterministic fallback for unnamed classes.
std::string group_name(const PermGroup& g);

bool is_abelian(const PermGroup& g);

}  // namespace bisetkit
