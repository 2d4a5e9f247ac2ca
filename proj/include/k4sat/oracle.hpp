#pragma once

// Generic subgraph oracle kept independent of the fast saturation path.
//
// naive_contains does exhaustive injective pattern search (patterns up to
// five vertices) and naive_is_saturated re-derives every saturation verdict
// from it, one full containment scan per non-edge. The fast checker and the
// oracle must agree everywhere; disagreement throws rather than guessing.

#include <array>
#include <stdexcept>

#include "k4sat/graph.hpp"
#include "k4sat/saturation.hpp"

namespace k4sat {

inline constexpr int kMaxPatternVertices = 5;

// K4 minus the (2,3) edge: base edge (0,1), apexes 2 and 3.
inline Graph diamond_pattern() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// Not-necessarily-induced subgraph containment by backtracking injection,
// candidates driven from already-placed neighbors, degrees as pruning.
inline bool naive_contains(const Graph& host, const Graph& pattern) {
    const int k = pattern.order();
    if (k > kMaxPatternVertices)
        throw std::invalid_argument("naive_contains: pattern limited to " +
                                    std::to_string(kMaxPatternVertices) + " vertices");
    const int n = host.order();
    if (k > n) return false;

    // Placement order: highest degree first, then greedily the vertex with
    // the most already-placed pattern neighbors.
    std::array<int, kMaxPatternVertices> order{};
    VertexSet ordered = 0;
    for (int i = 0; i < k; ++i) {
        int best = -1;
        int best_links = -1;
        int best_degree = -1;
        for (int p = 0; p < k; ++p) {
            if (ordered & vertex_bit(p)) continue;
            const int links = set_size(pattern.neighbors(p) & ordered);
            const int degree = pattern.degree(p);
            if (links > best_links || (links == best_links && degree > best_degree)) {
                best = p;
                best_links = links;
                best_degree = degree;
            }
        }
        order[static_cast<std::size_t>(i)] = best;
        ordered |= vertex_bit(best);
    }

    std::array<int, kMaxPatternVertices> image{};
    VertexSet used = 0;

    auto place = [&](auto&& self, int depth) -> bool {
        if (depth == k) return true;
        const int p = order[static_cast<std::size_t>(depth)];
        VertexSet candidates = host.vertex_mask() & ~used;
        for (int earlier = 0; earlier < depth; ++earlier) {
            const int q = order[static_cast<std::size_t>(earlier)];
            if (pattern.has_edge(p, q)) candidates &= host.neighbors(image[static_cast<std::size_t>(q)]);
        }
        for (VertexSet s = candidates; s; s &= s - 1) {
            const int c = first_vertex(s);
            if (host.degree(c) < pattern.degree(p)) continue;
            image[static_cast<std::size_t>(p)] = c;
            used |= vertex_bit(c);
            if (self(self, depth + 1)) return true;
            used &= ~vertex_bit(c);
        }
        return false;
    };
    return place(place, 0);
}

// Same verdict semantics as is_k4_minus_saturated, derived from the oracle.
// The boolean decisions are the oracle's own; witness extraction reuses the
// deterministic selectors so verdicts compare structurally, with a loud
// failure if extraction and oracle ever disagree.
inline SaturationVerdict naive_is_saturated(const Graph& g) {
    SaturationVerdict verdict;
    const Graph pattern = diamond_pattern();
    const bool contains = naive_contains(g, pattern);
    const auto fast_witness = detail::find_diamond(g.rows(), g.order());
    if (contains != fast_witness.has_value())
        throw std::logic_error("naive_is_saturated: containment detectors disagree");
    if (contains) {
        verdict.h_free = false;
        verdict.saturated = false;
        verdict.free_witness = {{fast_witness->base_u, fast_witness->base_v, fast_witness->apex_a,
                                 fast_witness->apex_b}};
        return verdict;
    }
    verdict.h_free = true;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.has_edge(u, v)) continue;
            if (!naive_contains(g.with_edge(u, v), pattern)) {
                verdict.saturated = false;
                verdict.nonedge_witness = {u, v};
                return verdict;
            }
        }
    }
    verdict.saturated = true;
    return verdict;
}

}  // namespace k4sat
