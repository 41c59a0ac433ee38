#include "cubic/fano.hpp"

#include <bit>

namespace cubic {

namespace fano {

int line_through(int a, int b) {
    static const auto table = [] {
        std::array<std::array<int, 8>, 8> t{};
        for (auto& row : t) row.fill(-1);
        for (int idx = 0; idx < 7; ++idx)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j)
                        t[static_cast<std::size_t>(kLines[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)])]
                         [static_cast<std::size_t>(kLines[static_cast<std::size_t>(idx)][static_cast<std::size_t>(j)])] = idx;
        return t;
    }();
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

}  // namespace fano

int FanoFlow::line_count() const { return std::popcount(static_cast<unsigned>(lines_used)); }

FanoFlow validate_fano_flow(const CubicGraph& g, std::vector<int> values) {
    if (static_cast<int>(values.size()) != g.edge_count())
        throw DomainError("flow must assign a value to every edge");
    for (int e = 0; e < g.edge_count(); ++e) {
        int v = values[static_cast<std::size_t>(e)];
        if (v < 1 || v > 7)
            throw DomainError("flow value out of range at edge " + std::to_string(e));
    }
    FanoFlow f;
    f.graph = &g;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        int x = values[static_cast<std::size_t>(inc[0])];
        int y = values[static_cast<std::size_t>(inc[1])];
        int z = values[static_cast<std::size_t>(inc[2])];
        if ((x ^ y ^ z) != 0 || x == y || y == z || x == z)
            throw DomainError("flow values at vertex " + std::to_string(v) +
                              " do not form a Fano line");
        f.lines_used |= static_cast<std::uint8_t>(1u << fano::line_through(x, y));
    }
    f.values = std::move(values);
    return f;
}

namespace {

class FanoSearch {
public:
    FanoSearch(const CubicGraph& g, const Budget& budget)
        : g_(g),
          m_(g.edge_count()),
          meter_(budget),
          values_(static_cast<std::size_t>(m_), 0),
          vassigned_(static_cast<std::size_t>(g.vertex_count()), 0),
          added_line_(static_cast<std::size_t>(m_), 0) {
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

    FanoSearchResult run() {
        // Any flow can be relabeled by a linear bijection of Z2^3 taking the
        // vertex-0 values, in edge order, to (1,2,3); line counts are
        // preserved, so the minimum is unaffected by pinning them.
        place(0, 1);
        place(1, 2);
        place(2, 3);
        dfs(3);
        unplace(2);
        unplace(1);
        unplace(0);

        FanoSearchResult r;
        r.nodes = meter_.nodes();
        if (budget_hit_)
            r.status = SearchStatus::budget_exceeded;
        else
            r.status = best_lines_ <= 7 ? SearchStatus::found : SearchStatus::exhausted;
        if (best_lines_ <= 7) {
            r.min_lines = best_lines_;
            r.flow = validate_fano_flow(g_, best_values_);
        }
        return r;
    }

private:
    void place(int pos, int val) {
        int e = edge_order_[static_cast<std::size_t>(pos)];
        values_[static_cast<std::size_t>(e)] = val;
        auto [u, v] = g_.edge(e);
        for (int w : {u, v}) {
            if (++vassigned_[static_cast<std::size_t>(w)] == 3) {
                const auto& inc = g_.incident(w);
                int a = values_[static_cast<std::size_t>(inc[0])];
                int b = values_[static_cast<std::size_t>(inc[1])];
                int bit = 1 << fano::line_through(a, b);
                if (!(line_mask_ & bit)) {
                    line_mask_ |= bit;
                    added_line_[static_cast<std::size_t>(pos)] |= bit;
                }
            }
        }
    }

    void unplace(int pos) {
        int e = edge_order_[static_cast<std::size_t>(pos)];
        auto [u, v] = g_.edge(e);
        for (int w : {u, v}) --vassigned_[static_cast<std::size_t>(w)];
        line_mask_ &= ~added_line_[static_cast<std::size_t>(pos)];
        added_line_[static_cast<std::size_t>(pos)] = 0;
        values_[static_cast<std::size_t>(e)] = 0;
    }

    void dfs(int pos) {
        if (budget_hit_) return;
        if (std::popcount(static_cast<unsigned>(line_mask_)) >= best_lines_) return;
        if (pos == m_) {
            best_lines_ = std::popcount(static_cast<unsigned>(line_mask_));
            best_values_ = values_;
            return;
        }
        int e = edge_order_[static_cast<std::size_t>(pos)];
        auto [u, v] = g_.edge(e);

        int forbidden = 0;  // values already present at either endpoint
        int forced = -1;
        for (int w : {u, v}) {
            int cnt = 0, acc = 0;
            for (int f : g_.incident(w)) {
                int val = values_[static_cast<std::size_t>(f)];
                if (val) {
                    forbidden |= 1 << val;
                    ++cnt;
                    acc ^= val;
                }
            }
            if (cnt == 2) {
                if (forced >= 0 && forced != acc) return;  // endpoints disagree
                forced = acc;
            }
        }
        if (forced == 0) return;  // the two assigned values coincide upstream

        int lo = forced > 0 ? forced : 1;
        int hi = forced > 0 ? forced : 7;
        for (int val = lo; val <= hi; ++val) {
            if ((forbidden >> val) & 1) continue;
            if (!meter_.tick()) {
                budget_hit_ = true;
                return;
            }
            place(pos, val);
            dfs(pos + 1);
            unplace(pos);
            if (budget_hit_) return;
        }
    }

    const CubicGraph& g_;
    int m_;
    BudgetMeter meter_;
    bool budget_hit_ = false;

    std::vector<int> edge_order_;
    std::vector<int> values_;
    std::vector<int> vassigned_;
    std::vector<int> added_line_;
    int line_mask_ = 0;

    int best_lines_ = 8;
    std::vector<int> best_values_;
};

}  // namespace

FanoSearchResult min_line_fano_flow(const CubicGraph& g, const Budget& budget) {
    if (!is_bridgeless(g)) throw DomainError("Fano-flow search requires a bridgeless graph");
    FanoSearch search(g, budget);
    return search.run();
}

FanoFlow triple_to_flow(const CoverTriple& t) {
    if (t.partition[3].any())
        throw DomainError("triple has an edge in all three joins; its flow value would be zero");
    const CubicGraph& g = *t.graph;
    std::vector<int> values(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        int membership = (t.joins[0].edges.test(e) ? 1 : 0) | (t.joins[1].edges.test(e) ? 2 : 0) |
                         (t.joins[2].edges.test(e) ? 4 : 0);
        values[static_cast<std::size_t>(e)] = 7 ^ membership;
    }
    return validate_fano_flow(g, std::move(values));
}

}  // namespace cubic
