#include "cubic/parity.hpp"

namespace cubic {

OddnessResult oddness(const CubicGraph& g) {
    if (!is_bridgeless(g)) throw DomainError("oddness requires a bridgeless graph");
    OddnessResult best;
    best.value = g.vertex_count() + 1;
    for_each_perfect_matching(g, [&](const Join& m) {
        int odd = odd_components(g, m.edges.complement());
        if (odd < best.value) {
            best.value = odd;
            best.witness = m.edges;
        }
    });
    return best;
}

OddnessResult weak_oddness(const CubicGraph& g) {
    if (!is_bridgeless(g)) throw DomainError("weak oddness requires a bridgeless graph");
    OddnessResult best;
    best.value = g.vertex_count() + 1;
    for_each_join(g, [&](const Join& j) {
        int odd = odd_components(g, j.edges.complement());
        if (odd < best.value) {
            best.value = odd;
            best.witness = j.edges;
        }
    });
    return best;
}

ParityReport parity_report(const CubicGraph& g) {
    ParityReport r;
    OddnessResult o = oddness(g);
    OddnessResult w = weak_oddness(g);
    r.oddness = o.value;
    r.weak_oddness = w.value;
    r.oddness_witness = o.witness;
    r.weak_oddness_witness = w.witness;
    return r;
}

Theorem4Check check_odd_component_bound(const CoverTriple& t) {
    Theorem4Check c;
    const CubicGraph& g = *t.graph;
    for (const Join& j : t.joins) c.lhs += odd_components(g, j.edges.complement());
    c.rhs = weak_core(t).l2;
    c.holds = c.lhs <= c.rhs;
    return c;
}

}  // namespace cubic
