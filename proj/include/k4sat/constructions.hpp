#pragma once

// Deterministic generators for the saturated families, the closed-form
// edge-count and spectrum formulas, and the interval-coverage checks.
//
// The layered family F(n, a, b) partitions its vertices into
//   I = {x}, A1 = {u1, u2}, A2 (a vertices), B1 = {v1, v2}, B2 (b vertices),
//   C (the remaining n-a-b-5 vertices)
// and takes the edges of K(A1+A2+C, B2), K(A2, B1), K(I, A1+B1+C) plus the
// matching M = {u1 v1, u2 v2}. Labels are assigned in the fixed order
// I, A1, A2, B1, B2, C so certificates are reproducible across runs.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k4sat/graph.hpp"

namespace k4sat {

namespace detail {

inline long long checked_add(long long x, long long y) {
    long long out = 0;
    if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("integer overflow in formula");
    return out;
}

inline long long checked_mul(long long x, long long y) {
    long long out = 0;
    if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("integer overflow in formula");
    return out;
}

}  // namespace detail

struct ConstructionParams {
    int n = 0;
    int a = 0;
    int b = 0;
};

inline void validate(const ConstructionParams& p) {
    if (p.a < 0 || p.b < 0) throw std::invalid_argument("construction: a and b must be non-negative");
    if (p.n < p.a + p.b + 5)
        throw std::invalid_argument("construction: need n >= a + b + 5, got n=" + std::to_string(p.n) +
                                    " a=" + std::to_string(p.a) + " b=" + std::to_string(p.b));
}

struct PartLabels {
    std::vector<int> I, A1, A2, B1, B2, C;
    std::array<std::pair<int, int>, 2> matching{};
};

struct FamilyGraph {
    Graph graph;
    PartLabels parts;
};

// b(n-b-3) + n + a - b + 1; exact for every valid (n, a, b).
inline long long f_edge_count(long long n, long long a, long long b) {
    if (a < 0 || b < 0 || n < a + b + 5)
        throw std::invalid_argument("f_edge_count: need a, b >= 0 and n >= a + b + 5");
    using detail::checked_add;
    using detail::checked_mul;
    return checked_add(checked_add(checked_mul(b, n - b - 3), n), a - b + 1);
}

inline FamilyGraph construct_f(const ConstructionParams& p) {
    validate(p);
    if (p.n > kMaxVertices)
        throw std::invalid_argument("construct_f: n exceeds " + std::to_string(kMaxVertices));

    PartLabels parts;
    int next = 0;
    parts.I = {next++};
    parts.A1 = {next, next + 1};
    next += 2;
    for (int i = 0; i < p.a; ++i) parts.A2.push_back(next++);
    parts.B1 = {next, next + 1};
    next += 2;
    for (int i = 0; i < p.b; ++i) parts.B2.push_back(next++);
    while (next < p.n) parts.C.push_back(next++);
    parts.matching = {{{parts.A1[0], parts.B1[0]}, {parts.A1[1], parts.B1[1]}}};

    std::vector<std::pair<int, int>> edges;
    std::vector<int> a_side = parts.A1;
    a_side.insert(a_side.end(), parts.A2.begin(), parts.A2.end());
    a_side.insert(a_side.end(), parts.C.begin(), parts.C.end());
    for (int u : a_side)
        for (int v : parts.B2) edges.emplace_back(u, v);
    for (int u : parts.A2)
        for (int v : parts.B1) edges.emplace_back(u, v);
    const int x = parts.I[0];
    for (int v : parts.A1) edges.emplace_back(x, v);
    for (int v : parts.B1) edges.emplace_back(x, v);
    for (int v : parts.C) edges.emplace_back(x, v);
    edges.emplace_back(parts.matching[0]);
    edges.emplace_back(parts.matching[1]);

    FamilyGraph out{Graph::from_edges(p.n, edges), std::move(parts)};
    if (out.graph.size() != f_edge_count(p.n, p.a, p.b))
        throw std::logic_error("construct_f: edge count disagrees with formula");
    return out;
}

// K(1, n-1) plus floor((n-1)/2) independent edges pairing the leaves.
inline Graph construct_star_matching(int n) {
    if (n < 2 || n > kMaxVertices) throw std::invalid_argument("construct_star_matching: need 2 <= n <= 62");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    for (int v = 1; v + 1 < n; v += 2) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

// Parts {0..i-1} and {i..n-1}, all i(n-i) cross edges.
inline Graph construct_complete_bipartite(int n, int i) {
    if (n < 2 || n > kMaxVertices) throw std::invalid_argument("construct_complete_bipartite: need 2 <= n <= 62");
    if (i < 1 || i > n - 1) throw std::invalid_argument("construct_complete_bipartite: need 1 <= i <= n - 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < i; ++u)
        for (int v = i; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// floor((n-1)/2) * ceil((n-1)/2) + 2: the edge count above which every
// saturated graph is bipartite.
inline long long bipartite_threshold(long long n) {
    if (n < 1) throw std::invalid_argument("bipartite_threshold: need n >= 1");
    return detail::checked_add(detail::checked_mul((n - 1) / 2, n / 2), 2);
}

struct SpectrumSet {
    long long n = 0;
    std::vector<long long> sizes;              // sorted, unique
    bool formula_out_of_range = false;         // set by spectrum_formula for n < 10
    std::vector<long long> unwitnessed_sizes;  // members backed by no saturated construction

    bool contains(long long m) const { return std::binary_search(sizes.begin(), sizes.end(), m); }
};

namespace detail {

// Guard for the formula sweeps: sizes lists grow like n^2/4.
inline void require_sweep_range(long long n, long long lo, const char* what) {
    if (n < lo) throw std::invalid_argument(std::string(what) + ": need n >= " + std::to_string(lo));
    if (n > 5000) throw std::invalid_argument(std::string(what) + ": sweep guard, need n <= 5000");
}

inline void sort_unique(std::vector<long long>& values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace detail

// The literal closed-form spectrum
//   { floor(3(n-1)/2) }  u  [2n-4, threshold]  u  { i(n-i) : 1 <= i <= n-1 }
// evaluated with no correction. Below n = 10 the formula is out of its
// supported range and the result is flagged; enumeration is the ground
// truth there. Values contributed only by i in {1, n-1} have no saturated
// witness (K(1, n-1) fails the saturation check) and are listed in
// unwitnessed_sizes.
inline SpectrumSet spectrum_formula(long long n) {
    detail::require_sweep_range(n, 4, "spectrum_formula");
    SpectrumSet out;
    out.n = n;
    out.formula_out_of_range = n < 10;

    std::vector<long long> core;
    core.push_back(3 * (n - 1) / 2);
    const long long threshold = bipartite_threshold(n);
    for (long long m = 2 * n - 4; m <= threshold; ++m) core.push_back(m);
    for (long long i = 2; i <= n - 2; ++i) core.push_back(detail::checked_mul(i, n - i));
    detail::sort_unique(core);

    out.sizes = core;
    const long long extreme = n - 1;  // i = 1 and i = n-1 both contribute n-1
    if (!std::binary_search(core.begin(), core.end(), extreme)) out.unwitnessed_sizes.push_back(extreme);
    out.sizes.push_back(extreme);
    detail::sort_unique(out.sizes);
    return out;
}

// Every edge count realized by the family: { f(n, a, b) : b >= 2, 0 <= a <= n-b-5 }.
inline SpectrumSet family_size_set(long long n) {
    detail::require_sweep_range(n, 9, "family_size_set");
    SpectrumSet out;
    out.n = n;
    for (long long b = 2; b <= (n - 5) / 2; ++b)
        for (long long a = 0; a <= n - b - 5; ++a) out.sizes.push_back(f_edge_count(n, a, b));
    detail::sort_unique(out.sizes);
    return out;
}

struct CoverageResult {
    long long lo = 0;
    long long hi = 0;
    bool covered = false;
    std::vector<long long> missing;
};

// Does the family cover every integer in [3n-11, threshold]?
inline CoverageResult family_covers_interval(long long n) {
    detail::require_sweep_range(n, 10, "family_covers_interval");
    CoverageResult out;
    out.lo = 3 * n - 11;
    out.hi = bipartite_threshold(n);
    const SpectrumSet family = family_size_set(n);
    for (long long m = out.lo; m <= out.hi; ++m)
        if (!family.contains(m)) out.missing.push_back(m);
    out.covered = out.missing.empty();
    return out;
}

// Consecutive parameter bands overlap: f(n, 0, b+1) <= f(n, n-b-5, b)
// for every b with both bands admissible.
inline bool band_overlap_holds(long long n) {
    detail::require_sweep_range(n, 11, "band_overlap_holds");
    for (long long b = 2; b + 1 <= (n - 5) / 2; ++b)
        if (f_edge_count(n, 0, b + 1) > f_edge_count(n, n - b - 5, b)) return false;
    return true;
}

}  // namespace k4sat
