#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "cubic/factors.hpp"
#include "cubic/search.hpp"

namespace cubic {

// Vertex counts by type: the sorted coverage pattern of the three incident
// edges under a triple of joins. Every vertex of a valid triple matches
// exactly one row.
struct TypeCounts {
    int a = 0;  // (3,3,3)
    int b = 0;  // (3,2,2)
    int c = 0;  // (3,1,1)
    int d = 0;  // (2,2,1)
    int e = 0;  // (1,1,1)
    int f = 0;  // (2,1,0)
    int g = 0;  // (3,0,0)
};

/// Three joins over one graph together with the coverage partition
/// E0..E3 (edge lies in E_i when exactly i of the three joins contain it)
/// and the per-type vertex counts. Construction checks the counting
/// identity |E0| + sum n(J_i) = |E2| + 2|E3| and the type-count relations.
struct CoverTriple {
    const CubicGraph* graph = nullptr;
    std::array<Join, 3> joins;
    std::array<EdgeSubset, 4> partition;
    TypeCounts types;

    long long sum_n_j() const {
        return joins[0].n_j() + joins[1].n_j() + joins[2].n_j();
    }
};

CoverTriple make_cover_triple(const Join& j1, const Join& j2, const Join& j3);

/// The subgraph induced by E0 ∪ E2 ∪ E3 with its two parameters. l is
/// half-integral in general, so it is carried as l2 = 2l = 2|E0| + 3 sum n(J_i).
struct WeakCore {
    EdgeSubset edges;
    int k = 0;          // members of the triple that are not perfect matchings
    long long l2 = 0;
};

WeakCore weak_core(const CoverTriple& t);

struct CoreProperties {
    bool is_cyclic = false;        // every vertex has degree 0 or 2 in the core
    bool is_bipartite = false;
    bool is_triangle_free = false;
    bool is_simple = false;        // all three joins are simple
};

CoreProperties core_properties(const CoverTriple& t);

enum class CoreObjective {
    l,                   // minimize l2 over triples with at most k_max non-matching members
    cyclic_feasibility,  // minimize the non-matching count over triples with a cyclic core
};

struct MinimizeResult {
    SearchStatus status = SearchStatus::exhausted;
    // Optimum for the requested objective; on budget_exceeded these carry the
    // best solution found before the cap (if any), never a silent truncation.
    long long best_l2 = -1;  // objective l
    int best_k = -1;         // objective cyclic_feasibility
    std::optional<CoverTriple> witness;
    std::uint64_t nodes = 0;
};

// Exact branch and bound over per-edge coverage labels (subsets of {1,2,3})
// with per-vertex degree feasibility, forced-label propagation, lexicographic
// symmetry breaking and the admissible bound 2|E0| + 3 * (committed J-vertices).
// k_max = 0 computes mu3 (as l2); k_max = 3 computes mu3' (as l2).
MinimizeResult minimize_core(const CubicGraph& g, int k_max, CoreObjective objective,
                             const Budget& budget = {});

enum class ConjectureId {
    fan_raspaud,         // three 1-factors with empty intersection
    two_pm_join,         // two 1-factors and a join with empty intersection
    one_pm_two_joins,    // a 1-factor and two joins with empty intersection
    cyclic_one_weak,     // two 1-factors and a join whose weak core is cyclic
    bipartite_core,      // three 1-factors with bipartite core
    triangle_free_core,  // three 1-factors with triangle-free core
    acyclic_e0_3pm,      // three 1-factors, complement of union acyclic
    acyclic_2pm,         // two 1-factors, complement of union acyclic
};

std::string_view conjecture_name(ConjectureId id);
std::optional<ConjectureId> conjecture_from_name(std::string_view name);

struct WitnessResult {
    SearchStatus status = SearchStatus::exhausted;  // found = witness, exhausted = refuted
    std::vector<EdgeSubset> witness;                // role order as in the predicate
    std::uint64_t nodes = 0;
};

// Deterministic first-witness search; "refuted" only after the relevant
// space (matching pairs/triples, matching-join mixes) is fully enumerated.
// Throws DomainError when g is not bridgeless.
WitnessResult find_witness(const CubicGraph& g, ConjectureId id, const Budget& budget = {});

// Re-evaluates the predicate of `id` on explicitly given edge sets, e.g. a
// deserialized witness. Checks join validity as well as the property.
bool witness_satisfies(const CubicGraph& g, ConjectureId id, const std::vector<EdgeSubset>& parts);

}  // namespace cubic
