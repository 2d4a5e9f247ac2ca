#pragma once

// Immutable simple graphs on up to 62 labeled vertices.
//
// Vertices are labeled 0..n-1. Adjacency is one 64-bit mask per vertex, so
// neighborhood algebra (intersections, cut counting, degrees) stays in word
// operations. Graphs never change after construction; adding an edge means
// building a new graph (with_edge). Instances can be shared freely across
// threads.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k4sat {

using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 62;  // short-form graph6 ceiling

// Malformed external input: edge lists, graph6 bytes, bad vertex labels.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline int set_size(VertexSet s) { return std::popcount(s); }
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }
inline VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

class Graph {
  public:
    Graph() = default;

    static Graph empty(int n) {
        require_order(n);
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), 0);
        return g;
    }

    static Graph complete(int n) {
        Graph g = empty(n);
        for (int v = 0; v < n; ++v) g.adj_[static_cast<std::size_t>(v)] = g.vertex_mask() & ~vertex_bit(v);
        g.edge_count_ = n * (n - 1) / 2;
        return g;
    }

    // Duplicate pairs collapse; loops and out-of-range labels are rejected.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        Graph g = empty(n);
        for (const auto& [u, v] : edges) g.add_edge_checked(u, v);
        g.verify_invariants();
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }

    // Number of edges.
    int size() const { return edge_count_; }

    VertexSet neighbors(int v) const {
        require_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return set_size(neighbors(v)); }

    bool has_edge(int u, int v) const {
        require_vertex(v);
        return (neighbors(u) & vertex_bit(v)) != 0;
    }

    VertexSet vertex_mask() const { return (VertexSet{1} << n_) - 1; }

    // Non-edge probe: a copy of this graph with the edge uv added.
    Graph with_edge(int u, int v) const {
        require_vertex(u);
        require_vertex(v);
        if (u == v) throw std::invalid_argument("with_edge: loop requested");
        if (has_edge(u, v)) throw std::invalid_argument("with_edge: edge already present");
        Graph g = *this;
        g.adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
        g.adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
        ++g.edge_count_;
        return g;
    }

    // Edges as (u,v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 0; u < n_; ++u) {
            VertexSet higher = adj_[static_cast<std::size_t>(u)] & ~((vertex_bit(u) << 1) - 1);
            for (VertexSet s = higher; s; s &= s - 1) out.emplace_back(u, first_vertex(s));
        }
        return out;
    }

    // Raw adjacency rows for hot loops; valid while the graph is alive.
    const VertexSet* rows() const { return adj_.data(); }

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    static void require_order(int n) {
        if (n < 1 || n > kMaxVertices)
            throw FormatError("vertex count must be in [1, " + std::to_string(kMaxVertices) + "], got " +
                              std::to_string(n));
    }

    void require_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) +
                                        ")");
    }

    void add_edge_checked(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw FormatError("edge endpoint out of range: (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v) throw FormatError("loop at vertex " + std::to_string(u));
        if (!(adj_[static_cast<std::size_t>(u)] & vertex_bit(v))) {
            adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
            adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
            ++edge_count_;
        }
    }

    // Symmetry, loop-freeness and label range, checked on every build.
    void verify_invariants() const {
        for (int v = 0; v < n_; ++v) {
            VertexSet row = adj_[static_cast<std::size_t>(v)];
            if (row & ~vertex_mask()) throw std::logic_error("adjacency bit beyond vertex range");
            if (row & vertex_bit(v)) throw std::logic_error("loop in adjacency");
            for (VertexSet s = row; s; s &= s - 1)
                if (!(adj_[static_cast<std::size_t>(first_vertex(s))] & vertex_bit(v)))
                    throw std::logic_error("asymmetric adjacency");
        }
    }

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

// N(u) & N(v); u and v must be distinct.
inline VertexSet common_neighbors(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_neighbors: vertices must be distinct");
    return g.neighbors(u) & g.neighbors(v);
}

// Number of edges between v and the vertices of `target` (v itself excluded).
inline int edge_cut(const Graph& g, int v, VertexSet target) {
    return set_size(g.neighbors(v) & target & g.vertex_mask() & ~vertex_bit(v));
}

// Number of edges between two disjoint vertex sets.
inline int edge_cut(const Graph& g, VertexSet a, VertexSet b) {
    if (a & b) throw std::invalid_argument("edge_cut: sets must be disjoint");
    a &= g.vertex_mask();
    b &= g.vertex_mask();
    int total = 0;
    for (VertexSet s = a; s; s &= s - 1) total += set_size(g.neighbors(first_vertex(s)) & b);
    return total;
}

inline long long triangle_count(const Graph& g) {
    long long total = 0;
    for (const auto& [u, v] : g.edge_list()) total += set_size(common_neighbors(g, u, v));
    return total / 3;
}

}  // namespace k4sat
