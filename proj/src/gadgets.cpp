#include "cubic/gadgets.hpp"

#include <algorithm>

namespace cubic {

CubicGraph two_cut_connection(const CubicGraph& g1, int e1, const CubicGraph& g2, int e2,
                              int pairing) {
    if (e1 < 0 || e1 >= g1.edge_count())
        throw DomainError("edge index " + std::to_string(e1) + " out of range in first graph");
    if (e2 < 0 || e2 >= g2.edge_count())
        throw DomainError("edge index " + std::to_string(e2) + " out of range in second graph");
    int n1 = g1.vertex_count();
    auto [u1, v1] = g1.edge(e1);
    auto [u2, v2] = g2.edge(e2);
    if (pairing) std::swap(u2, v2);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g1.edge_count() + g2.edge_count()));
    for (int e = 0; e < g1.edge_count(); ++e)
        if (e != e1) edges.push_back(g1.edge(e));
    for (int e = 0; e < g2.edge_count(); ++e)
        if (e != e2) {
            auto [a, b] = g2.edge(e);
            edges.push_back({a + n1, b + n1});
        }
    edges.push_back({u1, u2 + n1});
    edges.push_back({v1, v2 + n1});
    return CubicGraph::from_edges(n1 + g2.vertex_count(), std::move(edges));
}

ExpansionMap k4_expand(const CubicGraph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(7 * m));
    std::vector<std::array<int, 4>> gadget_vertices(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edge(i);
        int a = n + 4 * i, b = a + 1, c = a + 2, d = a + 3;
        gadget_vertices[static_cast<std::size_t>(i)] = {a, b, c, d};
        // K4 on {a,b,c,d} minus its deleted edge ab, plus the connectors
        edges.push_back({u, a});
        edges.push_back({v, b});
        edges.push_back({a, c});
        edges.push_back({a, d});
        edges.push_back({b, c});
        edges.push_back({b, d});
        edges.push_back({c, d});
    }
    ExpansionMap x{g, CubicGraph::from_edges(n + 4 * m, std::move(edges)), {},
                   std::move(gadget_vertices), {}, {}};

    x.connector_pairs.resize(static_cast<std::size_t>(m));
    x.gadget_cd_edge.resize(static_cast<std::size_t>(m));
    x.gadget_circuit.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edge(i);
        auto [a, b, c, d] = x.gadget_vertices[static_cast<std::size_t>(i)];
        x.connector_pairs[static_cast<std::size_t>(i)] = {x.expanded.edge_index(u, a),
                                                          x.expanded.edge_index(v, b)};
        x.gadget_cd_edge[static_cast<std::size_t>(i)] = x.expanded.edge_index(c, d);
        x.gadget_circuit[static_cast<std::size_t>(i)] = {
            x.expanded.edge_index(a, c), x.expanded.edge_index(c, b),
            x.expanded.edge_index(b, d), x.expanded.edge_index(d, a)};
    }
    return x;
}

Join project_con(const ExpansionMap& x, const Join& f) {
    if (!x.expanded.same_graph(*f.graph))
        throw DomainError("join does not belong to the expanded graph");
    EdgeSubset base_edges(x.base.edge_count());
    for (int i = 0; i < x.base.edge_count(); ++i) {
        auto [ep, epp] = x.connector_pairs[static_cast<std::size_t>(i)];
        bool has_p = f.edges.test(ep), has_pp = f.edges.test(epp);
        if (has_p != has_pp)
            throw DomainError("set contains exactly one connector of gadget " + std::to_string(i) +
                              "; it cannot be a join");
        if (has_p) base_edges.set(i);
    }
    return Join::over(x.base, std::move(base_edges));
}

ExpansionMap counterexample_graph() { return k4_expand(build_named(NamedGraph::petersen)); }

namespace {

// Does the complement of `covered` contain a circuit? Cheap union-find with
// an epoch-reset parent array reused across millions of pairs.
class CircuitProbe {
public:
    explicit CircuitProbe(const CubicGraph& g)
        : g_(g), parent_(static_cast<std::size_t>(g.vertex_count())) {
        for (int i = 0; i < g.vertex_count(); ++i) parent_[static_cast<std::size_t>(i)] = i;
    }

    bool complement_has_circuit(const EdgeSubset& covered) {
        for (int i = 0; i < g_.vertex_count(); ++i) parent_[static_cast<std::size_t>(i)] = i;
        for (int e = 0; e < g_.edge_count(); ++e) {
            if (covered.test(e)) continue;
            auto [u, v] = g_.edge(e);
            int ru = find(u), rv = find(v);
            if (ru == rv) return true;
            parent_[static_cast<std::size_t>(ru)] = rv;
        }
        return false;
    }

private:
    int find(int v) {
        while (parent_[static_cast<std::size_t>(v)] != v) {
            parent_[static_cast<std::size_t>(v)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
            v = parent_[static_cast<std::size_t>(v)];
        }
        return v;
    }

    const CubicGraph& g_;
    std::vector<int> parent_;
};

}  // namespace

CounterexampleReport verify_counterexample(CounterexampleMode mode, const Budget& budget) {
    CounterexampleReport rep;
    BudgetMeter meter(budget);

    CubicGraph petersen = build_named(NamedGraph::petersen);
    std::vector<Join> base_pms = perfect_matchings(petersen);
    rep.petersen_pair_property = true;
    for (std::size_t i = 0; i < base_pms.size(); ++i)
        for (std::size_t j = i + 1; j < base_pms.size(); ++j)
            if ((base_pms[i].edges & base_pms[j].edges).count() != 1)
                rep.petersen_pair_property = false;

    ExpansionMap x = k4_expand(petersen);
    const CubicGraph& g = x.expanded;

    std::vector<EdgeSubset> pms;
    std::vector<EdgeSubset> cons;  // projections to the base, as base edge sets
    bool budget_out = false;
    for_each_perfect_matching_until(g, [&](const Join& pm) {
        if (!meter.tick()) {
            budget_out = true;
            return false;
        }
        pms.push_back(pm.edges);
        cons.push_back(project_con(x, pm).edges);
        return true;
    });
    if (budget_out) {
        rep.status = SearchStatus::budget_exceeded;
        rep.nodes = meter.nodes();
        return rep;
    }
    rep.pm_count = static_cast<long long>(pms.size());

    CircuitProbe probe(g);
    bool all_cyclic = true;
    for (std::size_t i = 0; i < pms.size() && all_cyclic; ++i) {
        for (std::size_t j = i + 1; j < pms.size(); ++j) {
            if (!meter.tick()) {
                budget_out = true;
                break;
            }
            ++rep.pairs_checked;
            bool pair_cyclic;
            if (mode == CounterexampleMode::structured) {
                // a shared base edge pins an uncovered 4-circuit in its gadget
                EdgeSubset shared = cons[i] & cons[j];
                int shared_edge = -1;
                shared.for_each_set([&](int e) {
                    if (shared_edge < 0) shared_edge = e;
                });
                if (shared_edge >= 0) {
                    const auto& circuit = x.gadget_circuit[static_cast<std::size_t>(shared_edge)];
                    pair_cyclic = true;
                    for (int e : circuit)
                        if (pms[i].test(e) || pms[j].test(e)) pair_cyclic = false;
                    if (!pair_cyclic)
                        pair_cyclic = probe.complement_has_circuit(pms[i] | pms[j]);
                } else {
                    pair_cyclic = probe.complement_has_circuit(pms[i] | pms[j]);
                }
            } else {
                pair_cyclic = probe.complement_has_circuit(pms[i] | pms[j]);
            }
            if (!pair_cyclic) {
                all_cyclic = false;
                break;
            }
        }
        if (budget_out) break;
    }
    rep.all_pairs_cyclic = all_cyclic;
    rep.status = budget_out ? SearchStatus::budget_exceeded : SearchStatus::found;
    rep.nodes = meter.nodes();
    return rep;
}

}  // namespace cubic
