#pragma once

#include <optional>
#include <string>

#include "bisetkit/burnside.hpp"

namespace bisetkit {

/// JSON document for an algebra table:
/// {schema_version, group, basis: [...], products: [[i, j, [[label, num, den], ...]], ...]}
std::string algebra_table_json(const AlgebraTable& t);
std::optional<AlgebraTable> parse_algebra_table_json(const std::string& text, const GroupPtr& g);

}  // namespace bisetkit
