#pragma once

#include <string>
#include <string_view>

#include "univg/graph.hpp"

namespace univg {

// Adjacency matrix as text: n lines of n space-separated 0/1 tokens.
// Errors name the offending row/column (1-based).
Graph parse_matrix_text(std::string_view text);
std::string format_matrix_text(const Graph& g);

}  // namespace univg
