#include "cubic/factors.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace cubic {

Join Join::over(const CubicGraph& g, EdgeSubset edges) {
    if (edges.size() != g.edge_count())
        throw DomainError("edge subset width does not match graph");
    Join j;
    j.graph = &g;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int deg = 0;
        for (int e : g.incident(v)) deg += edges.test(e) ? 1 : 0;
        if (deg == 3)
            j.j_vertices.push_back(v);
        else if (deg != 1)
            throw DomainError("not a join: vertex " + std::to_string(v) + " has degree " +
                              std::to_string(deg));
    }
    j.edges = std::move(edges);
    return j;
}

namespace {

// returns false to propagate an abort
bool match_from(const CubicGraph& g, EdgeSubset& picked, std::vector<char>& covered,
                int uncovered_left, const std::function<bool(const Join&)>& fn) {
    if (uncovered_left == 0) {
        Join m;
        m.graph = &g;
        m.edges = picked;
        return fn(m);
    }
    int v = 0;
    while (covered[static_cast<std::size_t>(v)]) ++v;
    covered[static_cast<std::size_t>(v)] = 1;
    bool keep_going = true;
    for (int e : g.incident(v)) {
        if (!keep_going) break;
        int w = g.other_end(e, v);
        if (covered[static_cast<std::size_t>(w)]) continue;
        covered[static_cast<std::size_t>(w)] = 1;
        picked.set(e);
        keep_going = match_from(g, picked, covered, uncovered_left - 2, fn);
        picked.reset(e);
        covered[static_cast<std::size_t>(w)] = 0;
    }
    covered[static_cast<std::size_t>(v)] = 0;
    return keep_going;
}

}  // namespace

void for_each_perfect_matching_until(const CubicGraph& g,
                                     const std::function<bool(const Join&)>& fn) {
    EdgeSubset picked(g.edge_count());
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    match_from(g, picked, covered, g.vertex_count(), fn);
}

void for_each_perfect_matching(const CubicGraph& g, const std::function<void(const Join&)>& fn) {
    for_each_perfect_matching_until(g, [&](const Join& m) {
        fn(m);
        return true;
    });
}

std::vector<Join> perfect_matchings(const CubicGraph& g) {
    std::vector<Join> out;
    for_each_perfect_matching(g, [&](const Join& m) { out.push_back(m); });
    return out;
}

CycleBasis cycle_basis(const CubicGraph& g) {
    if (!g.is_connected()) throw DomainError("cycle basis requires a connected graph");
    int n = g.vertex_count();
    int m = g.edge_count();

    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<char> in_tree(static_cast<std::size_t>(m), 0);
    std::vector<int> order;
    order.push_back(0);
    depth[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int e : g.incident(v)) {
            int w = g.other_end(e, v);
            if (depth[static_cast<std::size_t>(w)] < 0) {
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                parent_edge[static_cast<std::size_t>(w)] = e;
                in_tree[static_cast<std::size_t>(e)] = 1;
                order.push_back(w);
            }
        }
    }

    CycleBasis basis;
    for (int e = 0; e < m; ++e) {
        if (in_tree[static_cast<std::size_t>(e)]) continue;
        EdgeSubset cyc(m);
        cyc.set(e);
        auto [u, v] = g.edge(e);
        while (u != v) {
            int& deeper = depth[static_cast<std::size_t>(u)] >= depth[static_cast<std::size_t>(v)] ? u : v;
            int pe = parent_edge[static_cast<std::size_t>(deeper)];
            cyc.set(pe);
            deeper = g.other_end(pe, deeper);
        }
        basis.cycles.push_back(std::move(cyc));
    }
    return basis;
}

EdgeSubset CycleBasis::member(std::uint64_t coefficients) const {
    EdgeSubset out(cycles.empty() ? 0 : cycles.front().size());
    for (std::size_t i = 0; i < cycles.size(); ++i)
        if ((coefficients >> i) & 1) out ^= cycles[i];
    return out;
}

void for_each_join_until(const CubicGraph& g, const std::function<bool(const Join&)>& fn) {
    CycleBasis basis = cycle_basis(g);
    std::size_t dim = basis.cycles.size();
    if (dim >= 63)
        throw DomainError("join space too large to enumerate (dimension " + std::to_string(dim) + ")");
    int m = g.edge_count();
    EdgeSubset cycle(m);
    std::uint64_t total = std::uint64_t{1} << dim;
    for (std::uint64_t k = 0; k < total; ++k) {
        cycle.clear();
        for (std::size_t i = 0; i < dim; ++i)
            if ((k >> i) & 1) cycle ^= basis.cycles[i];
        Join j;
        j.graph = &g;
        j.edges = cycle.complement();
        for (int v = 0; v < g.vertex_count(); ++v) {
            bool isolated = true;
            for (int e : g.incident(v))
                if (cycle.test(e)) {
                    isolated = false;
                    break;
                }
            if (isolated) j.j_vertices.push_back(v);
        }
        if (!fn(j)) return;
    }
}

void for_each_join(const CubicGraph& g, const std::function<void(const Join&)>& fn) {
    for_each_join_until(g, [&](const Join& j) {
        fn(j);
        return true;
    });
}

std::vector<Join> joins(const CubicGraph& g) {
    std::vector<Join> out;
    for_each_join(g, [&](const Join& j) { out.push_back(j); });
    return out;
}

std::optional<std::uint64_t> first_join_avoiding(const CycleBasis& basis, const EdgeSubset& avoid) {
    std::size_t dim = basis.cycles.size();
    if (dim > 64) throw DomainError("cycle space dimension exceeds 64");
    // The k-th join is the complement of the k-th cycle-space member, so it
    // avoids `avoid` iff the member covers every avoided edge: one GF(2)
    // constraint per avoided edge over the basis coefficients.
    std::array<std::uint64_t, 64> pivot_row{};
    std::array<int, 64> pivot_rhs{};
    bool infeasible = false;
    avoid.for_each_set([&](int a) {
        std::uint64_t row = 0;
        for (std::size_t i = 0; i < dim; ++i)
            if (basis.cycles[i].test(a)) row |= std::uint64_t{1} << i;
        int b = 1;
        for (int bit = 63; bit >= 0; --bit) {
            if (!((row >> bit) & 1)) continue;
            if (pivot_row[static_cast<std::size_t>(bit)]) {
                row ^= pivot_row[static_cast<std::size_t>(bit)];
                b ^= pivot_rhs[static_cast<std::size_t>(bit)];
            } else {
                pivot_row[static_cast<std::size_t>(bit)] = row;
                pivot_rhs[static_cast<std::size_t>(bit)] = b;
                row = 0;
                b = 0;
                break;
            }
        }
        if (row == 0 && b == 1) infeasible = true;
    });
    if (infeasible) return std::nullopt;

    // Each pivot row's top bit is its pivot, so solving pivots in ascending
    // order only ever reads already-settled lower bits.
    auto solve = [&](std::uint64_t x, bool homogeneous) {
        for (int p = 0; p < 64; ++p) {
            if (!pivot_row[static_cast<std::size_t>(p)]) continue;
            std::uint64_t below =
                pivot_row[static_cast<std::size_t>(p)] & ((std::uint64_t{1} << p) - 1);
            int parity = (homogeneous ? 0 : pivot_rhs[static_cast<std::size_t>(p)]) ^
                         (std::popcount(below & x) & 1);
            if (parity)
                x |= std::uint64_t{1} << p;
            else
                x &= ~(std::uint64_t{1} << p);
        }
        return x;
    };

    std::uint64_t x = solve(0, false);

    // Null-space generators (one per free coefficient), triangularized by top
    // bit; greedy top-down reduction then yields the minimum integer in the
    // affine solution set, i.e. the first join in enumeration order.
    std::array<std::uint64_t, 64> reducer{};
    for (std::size_t f = 0; f < dim; ++f) {
        if (pivot_row[f]) continue;
        std::uint64_t gen = solve(std::uint64_t{1} << f, true);
        for (int t = 63; t >= 0; --t) {
            if (!((gen >> t) & 1)) continue;
            if (reducer[static_cast<std::size_t>(t)])
                gen ^= reducer[static_cast<std::size_t>(t)];
            else {
                reducer[static_cast<std::size_t>(t)] = gen;
                break;
            }
        }
    }
    for (int t = 63; t >= 0; --t)
        if (reducer[static_cast<std::size_t>(t)] && ((x >> t) & 1)) x ^= reducer[static_cast<std::size_t>(t)];
    return x;
}

bool is_simple_join(const Join& j) {
    const CubicGraph& g = *j.graph;
    std::vector<char> is_j(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : j.j_vertices) is_j[static_cast<std::size_t>(v)] = 1;
    std::vector<int> root(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < root.size(); ++i) root[i] = static_cast<int>(i);
    auto find = [&](int v) {
        while (root[static_cast<std::size_t>(v)] != v) {
            root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
            v = root[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const Edge& e : g.edges()) {
        if (!is_j[static_cast<std::size_t>(e.first)] || !is_j[static_cast<std::size_t>(e.second)]) continue;
        int a = find(e.first), b = find(e.second);
        if (a == b) return false;  // circuit among J-vertices
        root[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

Join reduce_triangle(const Join& j, int x, int y, int z) {
    const CubicGraph& g = *j.graph;
    int xy = g.edge_index(x, y), xz = g.edge_index(x, z), yz = g.edge_index(y, z);
    if (xy < 0 || xz < 0 || yz < 0)
        throw DomainError("triangle reduction needs three mutually adjacent vertices");
    if (!j.edges.test(xz) || !j.edges.test(yz))
        throw DomainError("triangle reduction needs both apex edges in the join");
    if (j.edges.test(xy)) throw DomainError("triangle reduction needs the base edge outside the join");
    EdgeSubset swapped = j.edges;
    swapped.reset(xz);
    swapped.reset(yz);
    swapped.set(xy);
    return Join::over(g, std::move(swapped));
}

int odd_components(const CubicGraph& g, const EdgeSubset& edges, const std::vector<int>& vertices) {
    std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : vertices) in_set[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> queue;
    int odd = 0;
    for (int s : vertices) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        queue.clear();
        queue.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        int size = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            ++size;
            for (int e : g.incident(v)) {
                if (!edges.test(e)) continue;
                int w = g.other_end(e, v);
                if (!in_set[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
        if (size % 2 == 1) ++odd;
    }
    return odd;
}

int odd_components(const CubicGraph& g, const EdgeSubset& edges) {
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return odd_components(g, edges, all);
}

}  // namespace cubic
