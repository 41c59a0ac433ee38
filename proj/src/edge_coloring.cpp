#include "cubic/edge_coloring.hpp"

namespace cubic {

namespace {

bool color_edge(const CubicGraph& g, std::vector<int>& color, int e) {
    int m = g.edge_count();
    if (e == m) return true;
    auto [u, v] = g.edge(e);
    int used = 0;
    for (int f : g.incident(u))
        if (color[static_cast<std::size_t>(f)] >= 0) used |= 1 << color[static_cast<std::size_t>(f)];
    for (int f : g.incident(v))
        if (color[static_cast<std::size_t>(f)] >= 0) used |= 1 << color[static_cast<std::size_t>(f)];
    for (int c = 0; c < 3; ++c) {
        if ((used >> c) & 1) continue;
        color[static_cast<std::size_t>(e)] = c;
        if (color_edge(g, color, e + 1)) return true;
        color[static_cast<std::size_t>(e)] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> three_edge_coloring(const CubicGraph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.edge_count()), -1);
    if (color_edge(g, color, 0)) return color;
    return std::nullopt;
}

}  // namespace cubic
