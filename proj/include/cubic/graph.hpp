#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubic {

// Thrown on malformed graph6 input; offset is the byte position in the line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Thrown when an input violates a structural requirement (not cubic, not
// simple, disconnected where connectivity is required, mixed graphs, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

using Edge = std::pair<int, int>;  // endpoints, stored with first < second

/// Immutable 3-regular simple graph. Edge indices are stable and ordered
/// lexicographically by (min endpoint, max endpoint); everything downstream
/// that promises deterministic enumeration relies on that order.
class CubicGraph {
public:
    // Validates: n even and >= 4, no loops, no parallel edges, every degree 3.
    static CubicGraph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    // The three incident edge indices of v, ascending.
    const std::array<int, 3>& incident(int v) const { return incidence_[static_cast<std::size_t>(v)]; }

    // Index of edge {u,v}, or -1 if absent.
    int edge_index(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

    // Endpoint of edge e that is not v.
    int other_end(int e, int v) const {
        const Edge& uv = edges_[static_cast<std::size_t>(e)];
        return uv.first == v ? uv.second : uv.first;
    }

    bool is_connected() const { return connected_; }

    // Structural equality (same n, same edge list). Used to guard set
    // operations that only make sense between objects over one graph.
    bool same_graph(const CubicGraph& other) const {
        return this == &other || (n_ == other.n_ && edges_ == other.edges_);
    }

private:
    CubicGraph() = default;

    int n_ = 0;
    bool connected_ = false;
    std::vector<Edge> edges_;
    std::vector<std::array<int, 3>> incidence_;
};

/// Fixed-width bit vector over the edge indices of one graph; the currency
/// of matchings, joins and cores. Set operations require equal widths.
class EdgeSubset {
public:
    EdgeSubset() = default;
    explicit EdgeSubset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int size() const { return bits_; }

    bool test(int i) const { return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }
    void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear();

    int count() const;
    bool any() const;
    bool none() const { return !any(); }

    EdgeSubset& operator&=(const EdgeSubset& o);
    EdgeSubset& operator|=(const EdgeSubset& o);
    EdgeSubset& operator^=(const EdgeSubset& o);
    friend EdgeSubset operator&(EdgeSubset a, const EdgeSubset& b) { return a &= b; }
    friend EdgeSubset operator|(EdgeSubset a, const EdgeSubset& b) { return a |= b; }
    friend EdgeSubset operator^(EdgeSubset a, const EdgeSubset& b) { return a ^= b; }

    // All edge indices not in this subset (within the width).
    EdgeSubset complement() const;

    bool intersects(const EdgeSubset& o) const;
    bool is_subset_of(const EdgeSubset& o) const;

    bool operator==(const EdgeSubset& o) const = default;

    std::vector<int> to_indices() const;
    static EdgeSubset from_indices(int bits, const std::vector<int>& idx);

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                int b = static_cast<int>(w * 64) + __builtin_ctzll(x);
                fn(b);
                x &= x - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void check_width(const EdgeSubset& o) const;

    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

// graph6 I/O, bit-exact per the standard format (6-bit big-endian groups,
// bytes offset by 63, upper-triangle column order). Rejects graphs that are
// not cubic or not simple; accepts disconnected ones (callers gate on
// connectivity where they need it).
CubicGraph parse_graph6(std::string_view line);
std::string write_graph6(const CubicGraph& g);

// Reads a newline-delimited graph6 file that has already been loaded into
// memory; blank lines skipped, optional ">>graph6<<" header tolerated.
std::vector<std::string> split_graph6_lines(std::string_view file_contents);

bool is_bridgeless(const CubicGraph& g);  // throws DomainError if disconnected

enum class NamedGraph { k4, k3_3, petersen };

// Fixed labelings; Petersen is outer 5-circuit 0-4, inner pentagram 5-9,
// spokes i <-> i+5.
CubicGraph build_named(NamedGraph name);
CubicGraph build_named(std::string_view name);  // "k4" | "k3_3" | "petersen"

}  // namespace cubic
