#pragma once

#include <array>

#include "cubic/cores.hpp"
#include "cubic/search.hpp"

namespace cubic {

// The seven points are the nonzero elements of Z2^3 (1..7); a line is a
// triple of distinct points xoring to zero. There are exactly seven lines
// and every point lies on three of them.
namespace fano {

inline constexpr std::array<std::array<int, 3>, 7> kLines = {{
    {1, 2, 3},
    {1, 4, 5},
    {1, 6, 7},
    {2, 4, 6},
    {2, 5, 7},
    {3, 4, 7},
    {3, 5, 6},
}};

// Index into kLines of the line through two distinct points, -1 if a == b.
int line_through(int a, int b);

}  // namespace fano

/// Edge-indexed assignment of Fano points such that the three values at
/// every vertex are pairwise distinct and xor to zero (hence form a line).
struct FanoFlow {
    const CubicGraph* graph = nullptr;
    std::vector<int> values;      // one point (1..7) per edge
    std::uint8_t lines_used = 0;  // bitmask over fano::kLines indices

    int line_count() const;
};

// Validates the vertex condition; throws DomainError on a zero value or a
// vertex whose incident values do not xor to zero.
FanoFlow validate_fano_flow(const CubicGraph& g, std::vector<int> values);

struct FanoSearchResult {
    SearchStatus status = SearchStatus::exhausted;
    int min_lines = -1;
    std::optional<FanoFlow> flow;
    std::uint64_t nodes = 0;
};

// Exact minimum number of distinct lines over all Fano-flows, by
// backtracking over edges in BFS order with forced-value propagation and
// branch-and-bound on the committed line set. Requires a bridgeless input.
FanoSearchResult min_line_fano_flow(const CubicGraph& g, const Budget& budget = {});

// Flow from a cover triple with empty E3: the value of an edge is the
// bitwise complement of its membership vector, so each coordinate is
// 1 + [e in J_i] mod 2. Throws DomainError when E3 is nonempty (some edge
// would map to zero).
FanoFlow triple_to_flow(const CoverTriple& t);

}  // namespace cubic
