#pragma once

#include "cubic/graph.hpp"

namespace cubic {

// Generalized Petersen graph GP(n, k), 1 <= k < n/2: outer n-circuit 0..n-1,
// inner vertices n..2n-1 with steps of k, spokes i <-> n+i. GP(5,2) is the
// Petersen graph, GP(n,1) the n-prism.
CubicGraph generalized_petersen(int n, int k);

// Moebius ladder: circuit on 2n vertices plus the n diameters. n = 2 gives
// K4, n = 3 gives K3,3.
CubicGraph moebius_ladder(int n);

// LCF notation: Hamiltonian circuit on jumps.size()*repeats vertices plus
// one chord per vertex, vertex i to i + jumps[i mod jumps.size()].
CubicGraph lcf_graph(const std::vector<int>& jumps, int repeats);

// Flower snark J_k for odd k >= 3: k claws b_i-(a_i,c_i,d_i), an a-circuit,
// and one long circuit through all c_i then all d_i. Class 2 for k >= 5.
CubicGraph flower_snark(int k);

// Isaacs dot product. Removes independent edges f1 = a1b1, f2 = a2b2 from
// g1 and adjacent vertices u,v (the endpoints of e2) from g2, then joins
// a1-u1, b1-u2, a2-v1, b2-v2 where u1,u2 / v1,v2 are the remaining
// neighbors of u / v in index order. twist bit 0 swaps u1,u2; bit 1 swaps
// v1,v2. The result has |V1|+|V2|-2 vertices; applied to two class 2 graphs
// it is class 2 again.
CubicGraph dot_product(const CubicGraph& g1, int f1, int f2, const CubicGraph& g2, int e2,
                       int twist = 0);

// Shortest circuit length.
int girth(const CubicGraph& g);

// No edge cut of size < 4 separates two circuit-containing components
// (brute force over all cuts of size at most 3; intended for small graphs).
bool is_cyclically_4_edge_connected(const CubicGraph& g);

}  // namespace cubic
