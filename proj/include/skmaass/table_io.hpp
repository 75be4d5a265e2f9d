#pragma once

#include <string>

#include "skmaass/sk.hpp"

namespace skmaass {

// File format: {"weight": k, "entries": [{"a":..,"b":..,"c":..,"value":"num/den"},..]}
// Entries must be reduced positive definite forms; duplicates are rejected.
// On disk the entries are sorted by (|disc|, a, b, c).

std::string table_to_json(const CoefficientTable& table);
CoefficientTable table_from_json(const std::string& text);

void save_table(const CoefficientTable& table, const std::string& path);
CoefficientTable load_table(const std::string& path);

} // namespace skmaass
