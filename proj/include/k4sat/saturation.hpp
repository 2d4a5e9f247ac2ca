#pragma once

// K4^- detection and saturation checking.
//
// K4^- (the diamond: K4 minus one edge) sits in a graph exactly when some
// edge uv has two common neighbors, so detection is a common-neighbor scan
// rather than generic pattern search. The incremental add-edge test uses
// the fact that every edge of a diamond touches one of the base edge's
// endpoints: a new copy created by adding uv must have its base edge at u,
// at v, or be uv itself.

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

#include "k4sat/graph.hpp"
#include "k4sat/odd_cycle.hpp"

namespace k4sat {

// Base edge (u, v) plus two common neighbors.
struct DiamondWitness {
    int base_u = -1;
    int base_v = -1;
    int apex_a = -1;
    int apex_b = -1;
};

struct SaturationVerdict {
    bool h_free = false;
    bool saturated = false;
    std::optional<std::array<int, 4>> free_witness;        // engaged iff !h_free
    std::optional<std::pair<int, int>> nonedge_witness;    // engaged iff h_free && !saturated

    friend bool operator==(const SaturationVerdict&, const SaturationVerdict&) = default;
};

namespace detail {

// Smallest base edge in lex order, then the two smallest common neighbors.
inline std::optional<DiamondWitness> find_diamond(const VertexSet* adj, int n) {
    for (int u = 0; u < n; ++u) {
        VertexSet higher = adj[u] & ~((vertex_bit(u) << 1) - 1);
        for (VertexSet s = higher; s; s &= s - 1) {
            const int v = first_vertex(s);
            const VertexSet cn = adj[u] & adj[v];
            if (set_size(cn) >= 2) {
                const int a = first_vertex(cn);
                const int b = first_vertex(cn & (cn - 1));
                return DiamondWitness{u, v, a, b};
            }
        }
    }
    return std::nullopt;
}

// Host must be diamond-free and uv a non-edge. A diamond in G+uv either has
// base edge uv (two common neighbors already present) or base edge uw / vw
// for some common neighbor w of u and v, which then needs one more shared
// neighbor on that side.
inline bool creates_diamond_on_add(const VertexSet* adj, int u, int v) {
    const VertexSet cn = adj[u] & adj[v];
    if (set_size(cn) >= 2) return true;
    for (VertexSet s = cn; s; s &= s - 1) {
        const int w = first_vertex(s);
        if (adj[u] & adj[w]) return true;
        if (adj[v] & adj[w]) return true;
    }
    return false;
}

// First non-creating non-edge in lex order; assumes a diamond-free host.
inline bool is_saturated_rows(const VertexSet* adj, int n, int* witness_u, int* witness_v) {
    for (int u = 0; u < n; ++u) {
        const VertexSet candidates =
            ~adj[u] & ~((vertex_bit(u) << 1) - 1) & ((VertexSet{1} << n) - 1);
        for (VertexSet s = candidates; s; s &= s - 1) {
            const int v = first_vertex(s);
            if (!creates_diamond_on_add(adj, u, v)) {
                if (witness_u) *witness_u = u;
                if (witness_v) *witness_v = v;
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail

inline std::optional<DiamondWitness> contains_k4_minus(const Graph& g) {
    return detail::find_diamond(g.rows(), g.order());
}

inline bool creates_k4_minus_on_add(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("creates_k4_minus_on_add: vertices must be distinct");
    if (g.has_edge(u, v)) throw std::invalid_argument("creates_k4_minus_on_add: uv is already an edge");
    if (contains_k4_minus(g)) throw std::invalid_argument("creates_k4_minus_on_add: host graph contains K4^-");
    return detail::creates_diamond_on_add(g.rows(), u, v);
}

inline SaturationVerdict is_k4_minus_saturated(const Graph& g) {
    SaturationVerdict verdict;
    if (const auto w = contains_k4_minus(g)) {
        verdict.h_free = false;
        verdict.saturated = false;
        verdict.free_witness = {{w->base_u, w->base_v, w->apex_a, w->apex_b}};
        return verdict;
    }
    verdict.h_free = true;
    int u = -1;
    int v = -1;
    if (detail::is_saturated_rows(g.rows(), g.order(), &u, &v)) {
        verdict.saturated = true;
    } else {
        verdict.saturated = false;
        verdict.nonedge_witness = {u, v};
    }
    return verdict;
}

// With C a shortest odd cycle of length 2t+1 in a diamond-free
// non-bipartite graph, every vertex off C sends at most t edges into V(C).
// A false return signals a bug or a violated precondition.
inline bool odd_cycle_neighbor_bound(const Graph& g) {
    const auto cycle = shortest_odd_cycle(g);
    if (!cycle) throw std::invalid_argument("odd_cycle_neighbor_bound: graph is bipartite");
    const VertexSet mask = cycle->vertex_mask();
    const int t = cycle->half_length();
    for (int v = 0; v < g.order(); ++v) {
        if (mask & vertex_bit(v)) continue;
        if (set_size(g.neighbors(v) & mask) > t) return false;
    }
    return true;
}

// Re-verification of verdict certificates against the host graph.
inline bool verdict_consistent(const Graph& g, const SaturationVerdict& verdict) {
    if (verdict.saturated && !verdict.h_free) return false;
    if (!verdict.h_free) {
        if (!verdict.free_witness || verdict.nonedge_witness) return false;
        const auto& w = *verdict.free_witness;
        VertexSet seen = 0;
        for (int v : w) {
            if (v < 0 || v >= g.order() || (seen & vertex_bit(v))) return false;
            seen |= vertex_bit(v);
        }
        int edges = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (g.has_edge(w[i], w[j])) ++edges;
        return edges >= 5;
    }
    if (!verdict.saturated) {
        if (!verdict.nonedge_witness || verdict.free_witness) return false;
        const auto [u, v] = *verdict.nonedge_witness;
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) return false;
        if (g.has_edge(u, v)) return false;
        const Graph probed = g.with_edge(u, v);
        return !contains_k4_minus(probed).has_value();
    }
    return !verdict.free_witness && !verdict.nonedge_witness;
}

}  // namespace k4sat
