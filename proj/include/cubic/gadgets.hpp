#pragma once

#include <array>

#include "cubic/factors.hpp"
#include "cubic/search.hpp"

namespace cubic {

// Deletes e1 = u1v1 from g1 and e2 = u2v2 from g2 and joins the four ends
// with two new edges. pairing 0 connects u1-u2 / v1-v2, pairing 1 connects
// u1-v2 / v1-u2 (endpoints taken in sorted order). g2's vertices are
// relabeled to |V(g1)| .. |V(g1)|+|V(g2)|-1.
CubicGraph two_cut_connection(const CubicGraph& g1, int e1, const CubicGraph& g2, int e2,
                              int pairing = 0);

/// Result of replacing every edge of a base graph by a K4 gadget: base edge
/// e_i = uv is deleted and reconnected through a fresh copy with connector
/// edges e_i' (u side) and e_i'' (v side), leaving 5 internal edges per copy.
struct ExpansionMap {
    CubicGraph base;
    CubicGraph expanded;
    std::vector<std::pair<int, int>> connector_pairs;    // per base edge: (e_i', e_i'')
    std::vector<std::array<int, 4>> gadget_vertices;     // per base edge
    std::vector<int> gadget_cd_edge;                     // per base edge: internal edge matching c,d
    std::vector<std::array<int, 4>> gadget_circuit;      // per base edge: the 4-circuit a-c-b-d
};

ExpansionMap k4_expand(const CubicGraph& g);

// Projection of a join of the expanded graph to the base: keeps base edge
// e_i iff both connectors are in f. Every join contains both or neither
// connector of each gadget; that is asserted, and violation (which would
// mean f is not a join) raises DomainError.
Join project_con(const ExpansionMap& x, const Join& f);

struct CounterexampleReport {
    SearchStatus status = SearchStatus::found;
    long long pm_count = 0;
    long long pairs_checked = 0;
    bool all_pairs_cyclic = false;       // complement of every pair union has a circuit
    bool petersen_pair_property = false; // all 15 matching pairs of Petersen share one edge
    std::uint64_t nodes = 0;
};

enum class CounterexampleMode { full, structured };

// Builds the K4 expansion of the Petersen graph and checks that no two of
// its perfect matchings have an acyclic union complement. full: per-pair
// circuit search in the complement. structured: per pair, inspect only the
// gadget of a base edge shared by the two projections (where the uncovered
// 4-circuit must sit), falling back to the full check if no base edge is
// shared. Also verifies the Petersen pair property the argument rests on.
CounterexampleReport verify_counterexample(CounterexampleMode mode,
                                           const Budget& budget = Budget::unlimited());

// The 70-vertex graph itself, for emission and external scrutiny.
ExpansionMap counterexample_graph();

}  // namespace cubic
