#pragma once

#include <optional>

#include "cubic/graph.hpp"

namespace cubic {

// Proper 3-edge-coloring by plain backtracking over edges in index order.
// Returns one color (0..2) per edge, or nullopt for class 2 graphs. Kept
// deliberately independent of the core/flow machinery so it can serve as the
// second route in colorability cross-checks.
std::optional<std::vector<int>> three_edge_coloring(const CubicGraph& g);

inline bool is_three_edge_colorable(const CubicGraph& g) {
    return three_edge_coloring(g).has_value();
}

}  // namespace cubic
