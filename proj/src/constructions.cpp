#include "cubic/constructions.hpp"

#include <algorithm>
#include <set>

namespace cubic {

CubicGraph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n)
        throw DomainError("generalized Petersen graph needs n >= 3 and 1 <= k < n/2");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.push_back({i, (i + 1) % n});
        e.push_back({i, n + i});
        e.push_back({n + i, n + (i + k) % n});
    }
    return CubicGraph::from_edges(2 * n, std::move(e));
}

CubicGraph moebius_ladder(int n) {
    if (n < 2) throw DomainError("Moebius ladder needs n >= 2");
    std::vector<Edge> e;
    for (int i = 0; i < 2 * n; ++i) e.push_back({i, (i + 1) % (2 * n)});
    for (int i = 0; i < n; ++i) e.push_back({i, i + n});
    return CubicGraph::from_edges(2 * n, std::move(e));
}

CubicGraph lcf_graph(const std::vector<int>& jumps, int repeats) {
    int n = static_cast<int>(jumps.size()) * repeats;
    if (n < 4) throw DomainError("LCF graph too small");
    std::set<Edge> chords;
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    for (int i = 0; i < n; ++i) {
        int j = ((i + jumps[static_cast<std::size_t>(i) % jumps.size()]) % n + n) % n;
        chords.insert({std::min(i, j), std::max(i, j)});
    }
    e.insert(e.end(), chords.begin(), chords.end());
    return CubicGraph::from_edges(n, std::move(e));
}

CubicGraph flower_snark(int k) {
    if (k < 3 || k % 2 == 0) throw DomainError("flower snark needs odd k >= 3");
    // vertex layout: a_i = i, b_i = k+i, c_i = 2k+i, d_i = 3k+i
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
        int a = i, b = k + i, c = 2 * k + i, d = 3 * k + i;
        e.push_back({b, a});
        e.push_back({b, c});
        e.push_back({b, d});
        e.push_back({a, (i + 1) % k});
        if (i + 1 < k) {
            e.push_back({c, c + 1});
            e.push_back({d, d + 1});
        }
    }
    e.push_back({3 * k - 1, 3 * k});      // c_{k-1} - d_0
    e.push_back({4 * k - 1, 2 * k});      // d_{k-1} - c_0
    return CubicGraph::from_edges(4 * k, std::move(e));
}

CubicGraph dot_product(const CubicGraph& g1, int f1, int f2, const CubicGraph& g2, int e2,
                       int twist) {
    if (f1 < 0 || f1 >= g1.edge_count() || f2 < 0 || f2 >= g1.edge_count() || f1 == f2)
        throw DomainError("dot product needs two distinct edges of the first graph");
    if (e2 < 0 || e2 >= g2.edge_count()) throw DomainError("edge index out of range in second graph");
    auto [a1, b1] = g1.edge(f1);
    auto [a2, b2] = g1.edge(f2);
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2)
        throw DomainError("dot product needs independent edges in the first graph");
    auto [u, v] = g2.edge(e2);

    std::array<int, 2> un{}, vn{};
    std::size_t ui = 0, vi = 0;
    for (int e = 0; e < g2.edge_count(); ++e) {
        auto [x, y] = g2.edge(e);
        if (e != e2) {
            if (x == u) un[ui++] = y;
            if (y == u) un[ui++] = x;
            if (x == v) vn[vi++] = y;
            if (y == v) vn[vi++] = x;
        }
    }
    if (twist & 1) std::swap(un[0], un[1]);
    if (twist & 2) std::swap(vn[0], vn[1]);

    int n1 = g1.vertex_count();
    std::vector<int> relabel(static_cast<std::size_t>(g2.vertex_count()), -1);
    int next = n1;
    for (int w = 0; w < g2.vertex_count(); ++w)
        if (w != u && w != v) relabel[static_cast<std::size_t>(w)] = next++;

    std::vector<Edge> edges;
    for (int e = 0; e < g1.edge_count(); ++e)
        if (e != f1 && e != f2) edges.push_back(g1.edge(e));
    for (int e = 0; e < g2.edge_count(); ++e) {
        auto [x, y] = g2.edge(e);
        if (x == u || y == u || x == v || y == v) continue;
        edges.push_back({relabel[static_cast<std::size_t>(x)], relabel[static_cast<std::size_t>(y)]});
    }
    edges.push_back({a1, relabel[static_cast<std::size_t>(un[0])]});
    edges.push_back({b1, relabel[static_cast<std::size_t>(un[1])]});
    edges.push_back({a2, relabel[static_cast<std::size_t>(vn[0])]});
    edges.push_back({b2, relabel[static_cast<std::size_t>(vn[1])]});
    return CubicGraph::from_edges(n1 + g2.vertex_count() - 2, std::move(edges));
}

int girth(const CubicGraph& g) {
    int n = g.vertex_count();
    int best = n + 1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> from_edge(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[static_cast<std::size_t>(s)] = 0;
        from_edge[static_cast<std::size_t>(s)] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            if (2 * dist[static_cast<std::size_t>(x)] >= best) break;
            for (int e : g.incident(x)) {
                if (e == from_edge[static_cast<std::size_t>(x)]) continue;
                int y = g.other_end(e, x);
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    from_edge[static_cast<std::size_t>(y)] = e;
                    queue.push_back(y);
                } else {
                    best = std::min(best,
                                    dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1);
                }
            }
        }
    }
    return best;
}

namespace {

// component sizes (vertices, edges) of g minus a set of removed edges
bool cut_separates_two_circuits(const CubicGraph& g, const std::vector<int>& removed) {
    int n = g.vertex_count();
    std::vector<char> gone(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e : removed) gone[static_cast<std::size_t>(e)] = 1;
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int comp_count = 0;
    std::vector<int> queue;
    int circuit_components = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        int id = comp_count++;
        queue.clear();
        queue.push_back(s);
        comp[static_cast<std::size_t>(s)] = id;
        int vs = 0, es = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            ++vs;
            for (int e : g.incident(x)) {
                if (gone[static_cast<std::size_t>(e)]) continue;
                ++es;  // counted from both ends
                int y = g.other_end(e, x);
                if (comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = id;
                    queue.push_back(y);
                }
            }
        }
        if (es / 2 >= vs) ++circuit_components;  // a component with a circuit
    }
    return comp_count >= 2 && circuit_components >= 2;
}

}  // namespace

bool is_cyclically_4_edge_connected(const CubicGraph& g) {
    int m = g.edge_count();
    for (int a = 0; a < m; ++a) {
        if (cut_separates_two_circuits(g, {a})) return false;
        for (int b = a + 1; b < m; ++b) {
            if (cut_separates_two_circuits(g, {a, b})) return false;
            for (int c = b + 1; c < m; ++c)
                if (cut_separates_two_circuits(g, {a, b, c})) return false;
        }
    }
    return true;
}

}  // namespace cubic
