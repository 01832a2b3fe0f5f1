#pragma once

#include <string>
#include <vector>

#include "tsgraph/graph.hpp"

namespace tsgraph::cli {

/// Graphviz rendering: one node per vertex, one rank per time step, and
/// every edge drawn with dir=both so both end marks are visible (tail:
/// none, head: normal, circle: odot).
std::string to_dot(const WindowGraph& g, const std::vector<std::string>& names, const std::string& title = "G");

}  // namespace tsgraph::cli
