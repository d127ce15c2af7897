#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace clusterbench {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

// Accepts "4", "1,2,3" and "1..4" (inclusive range); values must be positive.
std::vector<std::size_t> parse_cluster_list(const std::string& text);

}  // namespace clusterbench
