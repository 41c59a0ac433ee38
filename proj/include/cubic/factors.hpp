#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

/// Edge set in which every vertex has degree 1 or 3. The complement is an
/// even subgraph (all degrees 0 or 2). j_vertices are the degree-3 vertices.
/// A join borrows the graph it was built over; the graph must outlive it.
struct Join {
    const CubicGraph* graph = nullptr;
    EdgeSubset edges;
    std::vector<int> j_vertices;

    int n_j() const { return static_cast<int>(j_vertices.size()); }
    bool is_perfect_matching() const { return j_vertices.empty(); }

    // Validates the degree condition; throws DomainError otherwise.
    static Join over(const CubicGraph& g, EdgeSubset edges);
};

using PerfectMatching = Join;  // a join with no J-vertices

// Exhaustive, duplicate-free, deterministic: backtracking that always matches
// the lowest-index uncovered vertex, trying incident edges in index order.
// The _until variant stops as soon as the callback returns false.
void for_each_perfect_matching(const CubicGraph& g, const std::function<void(const Join&)>& fn);
void for_each_perfect_matching_until(const CubicGraph& g,
                                     const std::function<bool(const Join&)>& fn);
std::vector<Join> perfect_matchings(const CubicGraph& g);

// All 2^(m-n+1) joins of a connected graph, as complements of cycle-space
// members built from a spanning-tree fundamental basis; order is by
// basis-coefficient integer. Throws DomainError if g is disconnected.
void for_each_join(const CubicGraph& g, const std::function<void(const Join&)>& fn);
void for_each_join_until(const CubicGraph& g, const std::function<bool(const Join&)>& fn);
std::vector<Join> joins(const CubicGraph& g);

// The fundamental-cycle basis the join enumerator uses, exposed so callers
// can answer "which join avoids this edge set" algebraically.
struct CycleBasis {
    std::vector<EdgeSubset> cycles;  // one per non-tree edge, ascending edge index
    EdgeSubset member(std::uint64_t coefficients) const;
};
CycleBasis cycle_basis(const CubicGraph& g);

// Join with the smallest basis-coefficient integer whose complement contains
// every edge of `avoid` (i.e. the first join in enumeration order disjoint
// from `avoid`), or nullopt if none exists.
std::optional<std::uint64_t> first_join_avoiding(const CycleBasis& basis, const EdgeSubset& avoid);

bool is_simple_join(const Join& j);

// Triangle reduction on a join: for a triangle {x,y,z} with xz and yz in the
// join and xy outside it, swaps the two apex edges for the base edge. The
// result is again a join (z drops from degree 3 to 1, x and y keep their
// parity); repeated application is what shrinks cores along triangles.
Join reduce_triangle(const Join& j, int x, int y, int z);

// Number of odd components of the subgraph (vertices, edges); isolated
// vertices count as odd components. Edges with an endpoint outside
// `vertices` are ignored.
int odd_components(const CubicGraph& g, const EdgeSubset& edges, const std::vector<int>& vertices);
int odd_components(const CubicGraph& g, const EdgeSubset& edges);  // over all of V(g)

}  // namespace cubic
