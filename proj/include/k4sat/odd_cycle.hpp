#pragma once

// Bipartiteness testing and exact shortest odd cycles.
//
// The shortest odd cycle is found by BFS over the bipartite double cover:
// the distance from (s, even) to (s, odd) is the length of the shortest odd
// closed walk through s, and the minimum of that over all sources is
// attained by a shortest odd cycle (a minimum odd closed walk is simple).

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "k4sat/graph.hpp"

namespace k4sat {

struct OddCycleInfo {
    // 2t+1 vertices; consecutive entries (cyclically) are adjacent.
    std::vector<int> cycle;

    int half_length() const { return (static_cast<int>(cycle.size()) - 1) / 2; }

    VertexSet vertex_mask() const {
        VertexSet m = 0;
        for (int v : cycle) m |= vertex_bit(v);
        return m;
    }
};

struct BipartiteCheck {
    bool bipartite = false;
    std::array<VertexSet, 2> sides{};           // meaningful iff bipartite
    std::optional<OddCycleInfo> odd_cycle;      // engaged iff not bipartite
};

namespace detail {

struct OddWalk {
    int source = -1;
    int length = 0;
};

// Double-cover node encoding: v*2 + parity.
inline OddWalk shortest_odd_walk(const VertexSet* adj, int n) {
    OddWalk best;
    int best_len = 2 * n + 1;
    for (int s = 0; s < n; ++s) {
        int dist[2 * kMaxVertices];
        int queue[2 * kMaxVertices];
        for (int i = 0; i < 2 * n; ++i) dist[i] = -1;
        int head = 0;
        int tail = 0;
        dist[2 * s] = 0;
        queue[tail++] = 2 * s;
        const int target = 2 * s + 1;
        while (head < tail && dist[target] < 0) {
            const int node = queue[head++];
            const int v = node >> 1;
            const int parity = node & 1;
            if (dist[node] + 1 >= best_len) break;
            for (VertexSet nb = adj[v]; nb; nb &= nb - 1) {
                const int w = first_vertex(nb);
                const int next = 2 * w + (parity ^ 1);
                if (dist[next] < 0) {
                    dist[next] = dist[node] + 1;
                    queue[tail++] = next;
                }
            }
        }
        if (dist[target] >= 0 && dist[target] < best_len) {
            best_len = dist[target];
            best = {s, best_len};
        }
    }
    return best;
}

inline std::vector<int> reconstruct_odd_cycle(const VertexSet* adj, int n, const OddWalk& walk) {
    int dist[2 * kMaxVertices];
    int parent[2 * kMaxVertices];
    int queue[2 * kMaxVertices];
    for (int i = 0; i < 2 * n; ++i) dist[i] = -1;
    int head = 0;
    int tail = 0;
    const int s = walk.source;
    dist[2 * s] = 0;
    parent[2 * s] = -1;
    queue[tail++] = 2 * s;
    while (head < tail) {
        const int node = queue[head++];
        const int v = node >> 1;
        const int parity = node & 1;
        for (VertexSet nb = adj[v]; nb; nb &= nb - 1) {
            const int w = first_vertex(nb);
            const int next = 2 * w + (parity ^ 1);
            if (dist[next] < 0) {
                dist[next] = dist[node] + 1;
                parent[next] = node;
                queue[tail++] = next;
            }
        }
    }
    if (dist[2 * s + 1] != walk.length) throw std::logic_error("odd cycle reconstruction mismatch");

    std::vector<int> cycle;
    cycle.reserve(static_cast<std::size_t>(walk.length));
    for (int node = 2 * s + 1; node != 2 * s; node = parent[node]) cycle.push_back(node >> 1);
    // Path listed odd-end first; reversing starts the cycle at the source.
    std::reverse(cycle.begin(), cycle.end());

    VertexSet seen = 0;
    for (int v : cycle) {
        if (seen & vertex_bit(v)) throw std::logic_error("shortest odd walk is not a simple cycle");
        seen |= vertex_bit(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!(adj[cycle[i]] & vertex_bit(cycle[(i + 1) % cycle.size()])))
            throw std::logic_error("odd cycle has a non-edge");
    return cycle;
}

// Mask-and-t variant for hot loops; avoids building the vertex sequence.
inline bool odd_cycle_mask(const VertexSet* adj, int n, VertexSet* mask_out, int* t_out) {
    const OddWalk walk = shortest_odd_walk(adj, n);
    if (walk.source < 0) return false;
    const std::vector<int> cycle = reconstruct_odd_cycle(adj, n, walk);
    VertexSet mask = 0;
    for (int v : cycle) mask |= vertex_bit(v);
    *mask_out = mask;
    *t_out = (static_cast<int>(cycle.size()) - 1) / 2;
    return true;
}

// Greedy BFS 2-coloring; fills side masks when 2-colorable.
inline bool two_color(const VertexSet* adj, int n, VertexSet* sides) {
    VertexSet color[2] = {0, 0};
    VertexSet visited = 0;
    int queue[kMaxVertices];
    int side_of[kMaxVertices];
    for (int root = 0; root < n; ++root) {
        if (visited & vertex_bit(root)) continue;
        visited |= vertex_bit(root);
        side_of[root] = 0;
        color[0] |= vertex_bit(root);
        int head = 0;
        int tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            const int v = queue[head++];
            const int next_side = side_of[v] ^ 1;
            for (VertexSet nb = adj[v]; nb; nb &= nb - 1) {
                const int w = first_vertex(nb);
                if (!(visited & vertex_bit(w))) {
                    visited |= vertex_bit(w);
                    side_of[w] = next_side;
                    color[next_side] |= vertex_bit(w);
                    queue[tail++] = w;
                } else if (side_of[w] != next_side) {
                    return false;
                }
            }
        }
    }
    if (sides) {
        sides[0] = color[0];
        sides[1] = color[1];
    }
    return true;
}

}  // namespace detail

inline std::optional<OddCycleInfo> shortest_odd_cycle(const Graph& g) {
    const detail::OddWalk walk = detail::shortest_odd_walk(g.rows(), g.order());
    if (walk.source < 0) return std::nullopt;
    return OddCycleInfo{detail::reconstruct_odd_cycle(g.rows(), g.order(), walk)};
}

inline BipartiteCheck is_bipartite(const Graph& g) {
    BipartiteCheck result;
    VertexSet sides[2];
    if (detail::two_color(g.rows(), g.order(), sides)) {
        result.bipartite = true;
        result.sides = {sides[0], sides[1]};
        return result;
    }
    result.bipartite = false;
    result.odd_cycle = shortest_odd_cycle(g);
    return result;
}

}  // namespace k4sat
