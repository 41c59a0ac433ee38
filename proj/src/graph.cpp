#include "cubic/graph.hpp"

#include <algorithm>
#include <bit>

namespace cubic {

namespace {

std::vector<int> bfs_component(int n, const std::vector<std::array<int, 3>>& inc,
                               const std::vector<Edge>& edges, int start) {
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    order.push_back(start);
    seen[static_cast<std::size_t>(start)] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int e : inc[static_cast<std::size_t>(v)]) {
            const Edge& uv = edges[static_cast<std::size_t>(e)];
            int w = uv.first == v ? uv.second : uv.first;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                order.push_back(w);
            }
        }
    }
    return order;
}

}  // namespace

CubicGraph CubicGraph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 4 || n % 2 != 0)
        throw DomainError("vertex count must be even and at least 4, got " + std::to_string(n));
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n)
            throw DomainError("edge endpoint out of range: (" + std::to_string(e.first) + "," +
                              std::to_string(e.second) + ")");
        if (e.first == e.second)
            throw DomainError("loop at vertex " + std::to_string(e.first));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw DomainError("parallel edge between " + std::to_string(edges[i].first) + " and " +
                              std::to_string(edges[i].second));

    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
        ++degree[static_cast<std::size_t>(e.first)];
        ++degree[static_cast<std::size_t>(e.second)];
    }
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] != 3)
            throw DomainError("not cubic: vertex " + std::to_string(v) + " has degree " +
                              std::to_string(degree[static_cast<std::size_t>(v)]));

    CubicGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.incidence_.assign(static_cast<std::size_t>(n), {-1, -1, -1});
    std::vector<int> fill(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
        const Edge& uv = g.edges_[static_cast<std::size_t>(e)];
        g.incidence_[static_cast<std::size_t>(uv.first)][static_cast<std::size_t>(
            fill[static_cast<std::size_t>(uv.first)]++)] = e;
        g.incidence_[static_cast<std::size_t>(uv.second)][static_cast<std::size_t>(
            fill[static_cast<std::size_t>(uv.second)]++)] = e;
    }
    g.connected_ =
        static_cast<int>(bfs_component(n, g.incidence_, g.edges_, 0).size()) == n;
    return g;
}

int CubicGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int e : incidence_[static_cast<std::size_t>(u)])
        if (edges_[static_cast<std::size_t>(e)] == Edge{u, v}) return e;
    return -1;
}

void EdgeSubset::clear() { std::fill(words_.begin(), words_.end(), 0); }

int EdgeSubset::count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool EdgeSubset::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

void EdgeSubset::check_width(const EdgeSubset& o) const {
    if (bits_ != o.bits_)
        throw DomainError("edge subsets belong to different graphs (widths " +
                          std::to_string(bits_) + " vs " + std::to_string(o.bits_) + ")");
}

EdgeSubset& EdgeSubset::operator&=(const EdgeSubset& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

EdgeSubset& EdgeSubset::operator|=(const EdgeSubset& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

EdgeSubset& EdgeSubset::operator^=(const EdgeSubset& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

EdgeSubset EdgeSubset::complement() const {
    EdgeSubset r(bits_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    int tail = bits_ & 63;
    if (tail && !r.words_.empty()) r.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return r;
}

bool EdgeSubset::intersects(const EdgeSubset& o) const {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

bool EdgeSubset::is_subset_of(const EdgeSubset& o) const {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

std::vector<int> EdgeSubset::to_indices() const {
    std::vector<int> out;
    for_each_set([&](int i) { out.push_back(i); });
    return out;
}

EdgeSubset EdgeSubset::from_indices(int bits, const std::vector<int>& idx) {
    EdgeSubset s(bits);
    for (int i : idx) {
        if (i < 0 || i >= bits)
            throw DomainError("edge index " + std::to_string(i) + " out of range");
        s.set(i);
    }
    return s;
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                          s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() &&
           (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

int g6_byte(std::string_view line, std::size_t pos) {
    if (pos >= line.size()) throw ParseError("graph6 line truncated", pos);
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", pos);
    return c - 63;
}

}  // namespace

CubicGraph parse_graph6(std::string_view line) {
    line = strip(line);
    if (line.substr(0, kGraph6Header.size()) == kGraph6Header)
        line = strip(line.substr(kGraph6Header.size()));
    if (line.empty()) throw ParseError("empty graph6 line", 0);
    if (line.front() == ':' || line.front() == ';')
        throw ParseError("sparse6 input not supported", 0);

    std::size_t pos = 0;
    long long n = 0;
    int first = g6_byte(line, pos);
    if (first < 63) {
        n = first;
        ++pos;
    } else {
        // 126 introduces the 3-byte (or 6-byte) size form.
        ++pos;
        int second = g6_byte(line, pos);
        if (second == 63) throw ParseError("graphs with n >= 2^18 not supported", pos);
        n = 0;
        for (int i = 0; i < 3; ++i) {
            n = (n << 6) | g6_byte(line, pos);
            ++pos;
        }
    }

    long long bit_count = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bit_count + 5) / 6);
    if (line.size() - pos != need)
        throw ParseError("graph6 body has wrong length (expected " + std::to_string(need) +
                             " bytes, got " + std::to_string(line.size() - pos) + ")",
                         pos);

    std::vector<Edge> edges;
    long long k = 0;
    int cur = 0, cur_bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (cur_bits == 0) {
                cur = g6_byte(line, pos);
                ++pos;
                cur_bits = 6;
            }
            --cur_bits;
            if ((cur >> cur_bits) & 1) edges.push_back({i, j});
        }
    }
    // trailing pad bits must be zero
    if (cur_bits > 0 && (cur & ((1 << cur_bits) - 1)) != 0)
        throw ParseError("nonzero padding bits", pos - 1);

    return CubicGraph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const CubicGraph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    std::vector<char> adj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.first) * n + e.second] = 1;
        adj[static_cast<std::size_t>(e.second) * n + e.first] = 1;
    }
    int cur = 0, cur_bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | adj[static_cast<std::size_t>(i) * n + j];
            if (++cur_bits == 6) {
                out.push_back(static_cast<char>(63 + cur));
                cur = 0;
                cur_bits = 0;
            }
        }
    }
    if (cur_bits > 0) out.push_back(static_cast<char>(63 + (cur << (6 - cur_bits))));
    return out;
}

std::vector<std::string> split_graph6_lines(std::string_view file_contents) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    bool first = true;
    while (start <= file_contents.size()) {
        std::size_t end = file_contents.find('\n', start);
        if (end == std::string_view::npos) end = file_contents.size();
        std::string_view raw = file_contents.substr(start, end - start);
        std::string_view s = strip(raw);
        if (first && s.substr(0, kGraph6Header.size()) == kGraph6Header)
            s = strip(s.substr(kGraph6Header.size()));
        first = false;
        if (!s.empty()) lines.emplace_back(s);
        if (end == file_contents.size()) break;
        start = end + 1;
    }
    return lines;
}

bool is_bridgeless(const CubicGraph& g) {
    if (!g.is_connected()) throw DomainError("bridge search requires a connected graph");
    int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    // iterative lowpoint DFS; frame = (vertex, incident slot, edge used to enter)
    struct Frame {
        int v;
        int slot;
        int in_edge;
    };
    std::vector<Frame> stack;
    int timer = 0;
    disc[0] = low[0] = timer++;
    stack.push_back({0, 0, -1});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.slot == 3) {
            if (f.in_edge >= 0) {
                int parent = g.other_end(f.in_edge, f.v);
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(f.v)]);
                if (low[static_cast<std::size_t>(f.v)] > disc[static_cast<std::size_t>(parent)])
                    return false;  // f.in_edge is a bridge
            }
            stack.pop_back();
            continue;
        }
        int e = g.incident(f.v)[static_cast<std::size_t>(f.slot++)];
        if (e == f.in_edge) continue;
        int w = g.other_end(e, f.v);
        if (disc[static_cast<std::size_t>(w)] < 0) {
            disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
            stack.push_back({w, 0, e});
        } else {
            low[static_cast<std::size_t>(f.v)] =
                std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
    }
    return true;
}

CubicGraph build_named(NamedGraph name) {
    switch (name) {
        case NamedGraph::k4: {
            std::vector<Edge> e;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) e.push_back({i, j});
            return CubicGraph::from_edges(4, std::move(e));
        }
        case NamedGraph::k3_3: {
            std::vector<Edge> e;
            for (int i = 0; i < 3; ++i)
                for (int j = 3; j < 6; ++j) e.push_back({i, j});
            return CubicGraph::from_edges(6, std::move(e));
        }
        case NamedGraph::petersen: {
            std::vector<Edge> e;
            for (int i = 0; i < 5; ++i) {
                e.push_back({i, (i + 1) % 5});          // outer circuit
                e.push_back({i, i + 5});                // spoke
                e.push_back({5 + i, 5 + (i + 2) % 5});  // pentagram
            }
            return CubicGraph::from_edges(10, std::move(e));
        }
    }
    throw DomainError("unknown named graph");
}

CubicGraph build_named(std::string_view name) {
    if (name == "k4") return build_named(NamedGraph::k4);
    if (name == "k3_3" || name == "k33") return build_named(NamedGraph::k3_3);
    if (name == "petersen") return build_named(NamedGraph::petersen);
    throw DomainError("unknown named graph: " + std::string(name));
}

}  // namespace cubic
