#include "cubic/cores.hpp"

#include <algorithm>
#include <bit>
#include <climits>

namespace cubic {

namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

struct Dsu {
    std::vector<int> root;
    explicit Dsu(int n) : root(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) root[static_cast<std::size_t>(i)] = i;
    }
    int find(int v) {
        while (root[static_cast<std::size_t>(v)] != v) {
            root[static_cast<std::size_t>(v)] =
                root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
            v = root[static_cast<std::size_t>(v)];
        }
        return v;
    }
    // returns false if the edge closes a circuit
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        root[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

bool subset_acyclic(const CubicGraph& g, const EdgeSubset& edges) {
    Dsu dsu(g.vertex_count());
    bool ok = true;
    edges.for_each_set([&](int e) {
        if (!ok) return;
        auto [u, v] = g.edge(e);
        if (!dsu.unite(u, v)) ok = false;
    });
    return ok;
}

bool subset_bipartite(const CubicGraph& g, const EdgeSubset& edges) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int e : g.incident(v)) {
                if (!edges.test(e)) continue;
                int w = g.other_end(e, v);
                if (color[static_cast<std::size_t>(w)] < 0) {
                    color[static_cast<std::size_t>(w)] = color[static_cast<std::size_t>(v)] ^ 1;
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool subset_triangle_free(const CubicGraph& g, const EdgeSubset& edges) {
    bool ok = true;
    edges.for_each_set([&](int e) {
        if (!ok) return;
        auto [u, v] = g.edge(e);
        for (int eu : g.incident(u)) {
            if (eu == e || !edges.test(eu)) continue;
            int w = g.other_end(eu, u);
            int ew = g.edge_index(w, v);
            if (ew >= 0 && edges.test(ew)) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

// Degree of every vertex lies in {1,3}: the join condition.
bool subset_has_join_degrees(const CubicGraph& g, const EdgeSubset& edges) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        int deg = 0;
        for (int e : g.incident(v)) deg += edges.test(e) ? 1 : 0;
        if (deg != 1 && deg != 3) return false;
    }
    return true;
}

// Edges covered exactly once by the three sets. The weak core is its
// complement, and the core is cyclic iff this set is itself a join.
EdgeSubset exactly_once(const EdgeSubset& c1, const EdgeSubset& c2, const EdgeSubset& c3) {
    EdgeSubset parity = c1 ^ c2 ^ c3;
    EdgeSubset majority = (c1 & c2) | (c1 & c3) | (c2 & c3);
    return parity & majority.complement();
}

}  // namespace

CoverTriple make_cover_triple(const Join& j1, const Join& j2, const Join& j3) {
    const CubicGraph& g = *j1.graph;
    if (!g.same_graph(*j2.graph) || !g.same_graph(*j3.graph))
        throw DomainError("cover triple requires three joins over the same graph");

    CoverTriple t;
    t.graph = &g;
    t.joins = {j1, j2, j3};

    int m = g.edge_count();
    for (auto& part : t.partition) part = EdgeSubset(m);
    for (int e = 0; e < m; ++e) {
        int cnt = (j1.edges.test(e) ? 1 : 0) + (j2.edges.test(e) ? 1 : 0) +
                  (j3.edges.test(e) ? 1 : 0);
        t.partition[static_cast<std::size_t>(cnt)].set(e);
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
        std::array<int, 3> cov{};
        for (std::size_t s = 0; s < 3; ++s) {
            int e = g.incident(v)[s];
            cov[s] = (j1.edges.test(e) ? 1 : 0) + (j2.edges.test(e) ? 1 : 0) +
                     (j3.edges.test(e) ? 1 : 0);
        }
        std::sort(cov.begin(), cov.end(), std::greater<>());
        if (cov == std::array<int, 3>{3, 3, 3})
            ++t.types.a;
        else if (cov == std::array<int, 3>{3, 2, 2})
            ++t.types.b;
        else if (cov == std::array<int, 3>{3, 1, 1})
            ++t.types.c;
        else if (cov == std::array<int, 3>{2, 2, 1})
            ++t.types.d;
        else if (cov == std::array<int, 3>{1, 1, 1})
            ++t.types.e;
        else if (cov == std::array<int, 3>{2, 1, 0})
            ++t.types.f;
        else if (cov == std::array<int, 3>{3, 0, 0})
            ++t.types.g;
        else
            throw std::logic_error("impossible coverage pattern at vertex " + std::to_string(v));
    }

    const TypeCounts& ty = t.types;
    long long e0 = t.partition[0].count();
    long long e2 = t.partition[2].count();
    long long e3 = t.partition[3].count();
    long long sum_n = t.sum_n_j();
    bool ok = sum_n == 3LL * ty.a + 2 * ty.b + ty.c + ty.d && 2 * e0 == ty.f + 2LL * ty.g &&
              2 * e2 == 2LL * ty.b + 2 * ty.d + ty.f &&
              2 * e3 == 3LL * ty.a + ty.b + ty.c + ty.g &&
              ty.a + ty.b + ty.c + ty.d + ty.e + ty.f + ty.g == g.vertex_count() &&
              e0 + sum_n == e2 + 2 * e3;
    if (!ok) throw std::logic_error("cover triple counting identity violated");
    return t;
}

WeakCore weak_core(const CoverTriple& t) {
    WeakCore w;
    w.edges = t.partition[0] | t.partition[2] | t.partition[3];
    w.k = 0;
    for (const Join& j : t.joins)
        if (!j.is_perfect_matching()) ++w.k;
    w.l2 = 2LL * t.partition[0].count() + 3LL * t.sum_n_j();
    return w;
}

CoreProperties core_properties(const CoverTriple& t) {
    const CubicGraph& g = *t.graph;
    EdgeSubset core = t.partition[0] | t.partition[2] | t.partition[3];
    CoreProperties p;
    p.is_cyclic = true;
    for (int v = 0; v < g.vertex_count() && p.is_cyclic; ++v) {
        int deg = 0;
        for (int e : g.incident(v)) deg += core.test(e) ? 1 : 0;
        if (deg != 0 && deg != 2) p.is_cyclic = false;
    }
    p.is_bipartite = subset_bipartite(g, core);
    p.is_triangle_free = subset_triangle_free(g, core);
    p.is_simple = is_simple_join(t.joins[0]) && is_simple_join(t.joins[1]) &&
                  is_simple_join(t.joins[2]);
    return p;
}

namespace {

// Branch and bound over per-edge coverage labels. A label is the subset of
// {J1,J2,J3} containing the edge, encoded in three bits. Join degrees must
// come out 1 or 3 at every vertex, which forces the third incident label
// once two are placed; costs are committed as soon as they are unavoidable
// (an edge labeled empty, a vertex with two incident edges in one join).
class CoreMinimizer {
public:
    CoreMinimizer(const CubicGraph& g, int k_max, CoreObjective objective, const Budget& budget)
        : g_(g),
          m_(g.edge_count()),
          k_max_(k_max),
          objective_(objective),
          meter_(budget),
          label_(static_cast<std::size_t>(m_), -1),
          vcnt_(static_cast<std::size_t>(g.vertex_count()), {0, 0, 0}),
          vassigned_(static_cast<std::size_t>(g.vertex_count()), 0),
          coredeg_(static_cast<std::size_t>(g.vertex_count()), 0) {
        // Edges in BFS-discovery order so vertices complete early and the
        // bound tightens as soon as possible.
        std::vector<char> seen_v(static_cast<std::size_t>(g.vertex_count()), 0);
        std::vector<char> seen_e(static_cast<std::size_t>(m_), 0);
        std::vector<int> queue{0};
        seen_v[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int e : g.incident(v)) {
                if (!seen_e[static_cast<std::size_t>(e)]) {
                    seen_e[static_cast<std::size_t>(e)] = 1;
                    edge_order_.push_back(e);
                }
                int w = g.other_end(e, v);
                if (!seen_v[static_cast<std::size_t>(w)]) {
                    seen_v[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
            }
        }
    }

    MinimizeResult run() {
        dfs(0, /*eq12=*/true, /*eq23=*/true);
        MinimizeResult r;
        r.nodes = meter_.nodes();
        bool have = objective_ == CoreObjective::l ? best_l2_ != LLONG_MAX : best_k_ <= k_max_;
        if (budget_hit_)
            r.status = SearchStatus::budget_exceeded;
        else
            r.status = have ? SearchStatus::found : SearchStatus::exhausted;
        if (have) {
            r.best_l2 = objective_ == CoreObjective::l ? best_l2_ : -1;
            r.best_k = objective_ == CoreObjective::cyclic_feasibility ? best_k_ : -1;
            std::array<EdgeSubset, 3> sets{EdgeSubset(m_), EdgeSubset(m_), EdgeSubset(m_)};
            for (int e = 0; e < m_; ++e)
                for (int i = 0; i < 3; ++i)
                    if ((best_labels_[static_cast<std::size_t>(e)] >> i) & 1)
                        sets[static_cast<std::size_t>(i)].set(e);
            r.witness = make_cover_triple(Join::over(g_, sets[0]), Join::over(g_, sets[1]),
                                          Join::over(g_, sets[2]));
        }
        return r;
    }

private:
    // Can vertex degree c+b still reach 1 or 3 with `rem` undecided edges?
    static bool degree_feasible(int c, int b, int rem) {
        int t = c + b;  // t <= 3: at most two other incident edges are assigned
        return (t <= 1 && t + rem >= 1) || t + rem >= 3;
    }

    bool prune_cost() const {
        if (objective_ == CoreObjective::l) return cost_ >= best_l2_;
        return nonpm_count_ >= best_k_;
    }

    void dfs(int pos, bool eq12, bool eq23) {
        if (budget_hit_) return;
        if (pos == m_) {
            if (objective_ == CoreObjective::l) {
                best_l2_ = cost_;
            } else {
                best_k_ = nonpm_count_;
            }
            best_labels_ = label_;
            return;
        }
        int e = edge_order_[static_cast<std::size_t>(pos)];
        auto [u, v] = g_.edge(e);
        for (int lb = 0; lb < 8; ++lb) {
            if (budget_hit_) return;
            // symmetry: the first position where two coordinate joins differ
            // must order them
            int b1 = lb & 1, b2 = (lb >> 1) & 1, b3 = (lb >> 2) & 1;
            if (eq12 && b1 > b2) continue;
            if (eq23 && b2 > b3) continue;
            bool ok = true;
            for (int w : {u, v}) {
                int rem = 3 - vassigned_[static_cast<std::size_t>(w)] - 1;
                for (int i = 0; i < 3 && ok; ++i)
                    ok = degree_feasible(vcnt_[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)],
                                         (lb >> i) & 1, rem);
                if (!ok) break;
            }
            if (!ok) continue;
            if (!meter_.tick()) {
                budget_hit_ = true;
                return;
            }
            apply(e, u, v, lb);
            bool feasible = nonpm_count_ <= k_max_ && !prune_cost();
            if (feasible && objective_ == CoreObjective::cyclic_feasibility) {
                for (int w : {u, v}) {
                    int cd = coredeg_[static_cast<std::size_t>(w)];
                    if (cd > 2 || (vassigned_[static_cast<std::size_t>(w)] == 3 && cd == 1))
                        feasible = false;
                }
            }
            if (feasible)
                dfs(pos + 1, eq12 && b1 == b2, eq23 && b2 == b3);
            undo(e, u, v, lb);
        }
    }

    void apply(int e, int u, int v, int lb) {
        label_[static_cast<std::size_t>(e)] = lb;
        if (lb == 0) cost_ += 2;
        int pc = std::popcount(static_cast<unsigned>(lb));
        for (int w : {u, v}) {
            ++vassigned_[static_cast<std::size_t>(w)];
            if (pc != 1) ++coredeg_[static_cast<std::size_t>(w)];
            for (int i = 0; i < 3; ++i) {
                if (!((lb >> i) & 1)) continue;
                if (++vcnt_[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)] == 2) {
                    cost_ += 3;
                    if (nonpm_vertices_[static_cast<std::size_t>(i)]++ == 0) ++nonpm_count_;
                }
            }
        }
    }

    void undo(int e, int u, int v, int lb) {
        label_[static_cast<std::size_t>(e)] = -1;
        if (lb == 0) cost_ -= 2;
        int pc = std::popcount(static_cast<unsigned>(lb));
        for (int w : {u, v}) {
            --vassigned_[static_cast<std::size_t>(w)];
            if (pc != 1) --coredeg_[static_cast<std::size_t>(w)];
            for (int i = 0; i < 3; ++i) {
                if (!((lb >> i) & 1)) continue;
                if (--vcnt_[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)] == 1) {
                    cost_ -= 3;
                    if (--nonpm_vertices_[static_cast<std::size_t>(i)] == 0) --nonpm_count_;
                }
            }
        }
    }

    const CubicGraph& g_;
    int m_;
    int k_max_;
    CoreObjective objective_;
    BudgetMeter meter_;
    bool budget_hit_ = false;

    std::vector<int> edge_order_;
    std::vector<int> label_;
    std::vector<std::array<int, 3>> vcnt_;
    std::vector<int> vassigned_;
    std::vector<int> coredeg_;
    std::array<int, 3> nonpm_vertices_{};
    int nonpm_count_ = 0;
    long long cost_ = 0;

    long long best_l2_ = LLONG_MAX;
    int best_k_ = 4;
    std::vector<int> best_labels_;
};

}  // namespace

MinimizeResult minimize_core(const CubicGraph& g, int k_max, CoreObjective objective,
                             const Budget& budget) {
    if (k_max < 0 || k_max > 3) throw DomainError("k_max must be between 0 and 3");
    if (!is_bridgeless(g)) throw DomainError("core minimization requires a bridgeless graph");
    CoreMinimizer search(g, k_max, objective, budget);
    return search.run();
}

namespace {

// Materializes perfect matchings under the budget meter; returns false if
// the budget ran out during enumeration.
bool collect_pms(const CubicGraph& g, BudgetMeter& meter, std::vector<EdgeSubset>& out) {
    bool ok = true;
    for_each_perfect_matching_until(g, [&](const Join& pm) {
        if (!meter.tick()) {
            ok = false;
            return false;
        }
        out.push_back(pm.edges);
        return true;
    });
    return ok;
}

}  // namespace

std::string_view conjecture_name(ConjectureId id) {
    switch (id) {
        case ConjectureId::fan_raspaud: return "fan-raspaud";
        case ConjectureId::two_pm_join: return "2pm+join";
        case ConjectureId::one_pm_two_joins: return "1pm+2joins";
        case ConjectureId::cyclic_one_weak: return "cyclic-1-weak";
        case ConjectureId::bipartite_core: return "bipartite-core";
        case ConjectureId::triangle_free_core: return "triangle-free-core";
        case ConjectureId::acyclic_e0_3pm: return "acyclic-e0-3pm";
        case ConjectureId::acyclic_2pm: return "acyclic-2pm";
    }
    return "?";
}

std::optional<ConjectureId> conjecture_from_name(std::string_view name) {
    std::string s = to_lower(name);
    if (s == "fan-raspaud" || s == "fr") return ConjectureId::fan_raspaud;
    if (s == "2pm+join" || s == "2pm-join") return ConjectureId::two_pm_join;
    if (s == "1pm+2joins" || s == "1pm-2joins") return ConjectureId::one_pm_two_joins;
    if (s == "cyclic-1-weak") return ConjectureId::cyclic_one_weak;
    if (s == "bipartite-core") return ConjectureId::bipartite_core;
    if (s == "triangle-free-core") return ConjectureId::triangle_free_core;
    if (s == "acyclic-e0-3pm") return ConjectureId::acyclic_e0_3pm;
    if (s == "acyclic-2pm") return ConjectureId::acyclic_2pm;
    return std::nullopt;
}

WitnessResult find_witness(const CubicGraph& g, ConjectureId id, const Budget& budget) {
    if (!is_bridgeless(g)) throw DomainError("witness search requires a bridgeless graph");
    BudgetMeter meter(budget);
    WitnessResult r;
    auto finish = [&](SearchStatus st) {
        r.status = st;
        r.nodes = meter.nodes();
        return r;
    };
    auto found = [&](std::vector<EdgeSubset> w) {
        r.witness = std::move(w);
        return finish(SearchStatus::found);
    };

    std::vector<EdgeSubset> pms;
    if (!collect_pms(g, meter, pms)) return finish(SearchStatus::budget_exceeded);
    std::size_t np = pms.size();

    switch (id) {
        case ConjectureId::fan_raspaud: {
            for (std::size_t i = 0; i < np; ++i)
                for (std::size_t j = i; j < np; ++j) {
                    EdgeSubset pij = pms[i] & pms[j];
                    for (std::size_t k = j; k < np; ++k) {
                        if (!meter.tick()) return finish(SearchStatus::budget_exceeded);
                        if (!pij.intersects(pms[k])) return found({pms[i], pms[j], pms[k]});
                    }
                }
            return finish(SearchStatus::exhausted);
        }
        case ConjectureId::two_pm_join: {
            CycleBasis basis = cycle_basis(g);
            for (std::size_t i = 0; i < np; ++i)
                for (std::size_t j = i; j < np; ++j) {
                    if (!meter.tick()) return finish(SearchStatus::budget_exceeded);
                    EdgeSubset shared = pms[i] & pms[j];
                    if (auto k = first_join_avoiding(basis, shared))
                        return found({pms[i], pms[j], basis.member(*k).complement()});
                }
            return finish(SearchStatus::exhausted);
        }
        case ConjectureId::one_pm_two_joins: {
            CycleBasis basis = cycle_basis(g);
            for (std::size_t i = 0; i < np; ++i) {
                bool budget_out = false;
                std::optional<WitnessResult> hit;
                for_each_join_until(g, [&](const Join& j1) {
                    if (!meter.tick()) {
                        budget_out = true;
                        return false;
                    }
                    EdgeSubset shared = pms[i] & j1.edges;
                    if (auto k2 = first_join_avoiding(basis, shared)) {
                        hit = found({pms[i], j1.edges, basis.member(*k2).complement()});
                        return false;
                    }
                    return true;
                });
                if (hit) return *hit;
                if (budget_out) return finish(SearchStatus::budget_exceeded);
            }
            return finish(SearchStatus::exhausted);
        }
        case ConjectureId::cyclic_one_weak: {
            for (std::size_t i = 0; i < np; ++i)
                for (std::size_t j = i; j < np; ++j) {
                    bool budget_out = false;
                    std::optional<WitnessResult> hit;
                    for_each_join_until(g, [&](const Join& jn) {
                        if (!meter.tick()) {
                            budget_out = true;
                            return false;
                        }
                        // the weak core is cyclic iff the once-covered edges
                        // form a join themselves
                        if (subset_has_join_degrees(g, exactly_once(pms[i], pms[j], jn.edges))) {
                            hit = found({pms[i], pms[j], jn.edges});
                            return false;
                        }
                        return true;
                    });
                    if (hit) return *hit;
                    if (budget_out) return finish(SearchStatus::budget_exceeded);
                }
            return finish(SearchStatus::exhausted);
        }
        case ConjectureId::bipartite_core:
        case ConjectureId::triangle_free_core: {
            for (std::size_t i = 0; i < np; ++i)
                for (std::size_t j = i; j < np; ++j)
                    for (std::size_t k = j; k < np; ++k) {
                        if (!meter.tick()) return finish(SearchStatus::budget_exceeded);
                        EdgeSubset core = exactly_once(pms[i], pms[j], pms[k]).complement();
                        bool okp = id == ConjectureId::bipartite_core
                                       ? subset_bipartite(g, core)
                                       : subset_triangle_free(g, core);
                        if (okp) return found({pms[i], pms[j], pms[k]});
                    }
            return finish(SearchStatus::exhausted);
        }
        case ConjectureId::acyclic_e0_3pm: {
            for (std::size_t i = 0; i < np; ++i)
                for (std::size_t j = i; j < np; ++j) {
                    EdgeSubset uij = pms[i] | pms[j];
                    for (std::size_t k = j; k < np; ++k) {
                        if (!meter.tick()) return finish(SearchStatus::budget_exceeded);
                        if (subset_acyclic(g, (uij | pms[k]).complement()))
                            return found({pms[i], pms[j], pms[k]});
                    }
                }
            return finish(SearchStatus::exhausted);
        }
        case ConjectureId::acyclic_2pm: {
            for (std::size_t i = 0; i < np; ++i)
                for (std::size_t j = i; j < np; ++j) {
                    if (!meter.tick()) return finish(SearchStatus::budget_exceeded);
                    if (subset_acyclic(g, (pms[i] | pms[j]).complement()))
                        return found({pms[i], pms[j]});
                }
            return finish(SearchStatus::exhausted);
        }
    }
    throw std::logic_error("unknown conjecture id");
}

bool witness_satisfies(const CubicGraph& g, ConjectureId id, const std::vector<EdgeSubset>& parts) {
    auto valid_join = [&](const EdgeSubset& s, bool must_be_pm) {
        try {
            Join j = Join::over(g, s);
            return !must_be_pm || j.is_perfect_matching();
        } catch (const DomainError&) {
            return false;
        }
    };
    switch (id) {
        case ConjectureId::fan_raspaud:
            return parts.size() == 3 && valid_join(parts[0], true) && valid_join(parts[1], true) &&
                   valid_join(parts[2], true) && !(parts[0] & parts[1]).intersects(parts[2]);
        case ConjectureId::two_pm_join:
            return parts.size() == 3 && valid_join(parts[0], true) && valid_join(parts[1], true) &&
                   valid_join(parts[2], false) && !(parts[0] & parts[1]).intersects(parts[2]);
        case ConjectureId::one_pm_two_joins:
            return parts.size() == 3 && valid_join(parts[0], true) && valid_join(parts[1], false) &&
                   valid_join(parts[2], false) && !(parts[0] & parts[1]).intersects(parts[2]);
        case ConjectureId::cyclic_one_weak:
            return parts.size() == 3 && valid_join(parts[0], true) && valid_join(parts[1], true) &&
                   valid_join(parts[2], false) &&
                   subset_has_join_degrees(g, exactly_once(parts[0], parts[1], parts[2]));
        case ConjectureId::bipartite_core:
            return parts.size() == 3 && valid_join(parts[0], true) && valid_join(parts[1], true) &&
                   valid_join(parts[2], true) &&
                   subset_bipartite(g, exactly_once(parts[0], parts[1], parts[2]).complement());
        case ConjectureId::triangle_free_core:
            return parts.size() == 3 && valid_join(parts[0], true) && valid_join(parts[1], true) &&
                   valid_join(parts[2], true) &&
                   subset_triangle_free(g, exactly_once(parts[0], parts[1], parts[2]).complement());
        case ConjectureId::acyclic_e0_3pm:
            return parts.size() == 3 && valid_join(parts[0], true) && valid_join(parts[1], true) &&
                   valid_join(parts[2], true) &&
                   subset_acyclic(g, (parts[0] | parts[1] | parts[2]).complement());
        case ConjectureId::acyclic_2pm:
            return parts.size() == 2 && valid_join(parts[0], true) && valid_join(parts[1], true) &&
                   subset_acyclic(g, (parts[0] | parts[1]).complement());
    }
    return false;
}

}  // namespace cubic
