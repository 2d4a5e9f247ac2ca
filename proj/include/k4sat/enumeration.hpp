#pragma once

// Exhaustive ground truth at small n: visit every labeled graph on up to 8
// vertices by branch-and-prune over the graph6 pair slots, report every
// saturated graph's size, and deduplicate up to isomorphism by brute force
// over vertex permutations.
//
// The search tree assigns pair slots in graph6 column order. A branch that
// sets an edge creating a K4^- is pruned: supergraphs of a K4^- stay
// non-K4^--free, and saturated graphs are K4^--free, so pruning never loses
// a saturated graph. Leaves are therefore exactly the K4^--free labeled
// graphs. Tasks fix the first prefix_len slot decisions, giving disjoint
// subtrees that workers process independently; merging is commutative, so
// reports do not depend on the worker count.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "k4sat/constructions.hpp"
#include "k4sat/graph.hpp"
#include "k4sat/graph6.hpp"
#include "k4sat/odd_cycle.hpp"
#include "k4sat/oracle.hpp"
#include "k4sat/parallel.hpp"
#include "k4sat/saturation.hpp"

namespace k4sat {

enum class CheckerMode { fast, naive, both };

inline const char* checker_mode_name(CheckerMode mode) {
    switch (mode) {
        case CheckerMode::fast: return "fast";
        case CheckerMode::naive: return "naive";
        case CheckerMode::both: return "both";
    }
    return "fast";
}

namespace detail {

inline constexpr int kMaxEnumVertices = 8;
inline constexpr int kMaxSlots = kMaxEnumVertices * (kMaxEnumVertices - 1) / 2;

struct SlotTable {
    std::array<std::pair<int, int>, kMaxSlots> pairs{};
    constexpr SlotTable() {
        int k = 0;
        for (int c = 1; c < kMaxEnumVertices; ++c)
            for (int r = 0; r < c; ++r) pairs[static_cast<std::size_t>(k++)] = {r, c};
    }
};
inline constexpr SlotTable kSlotTable{};

inline constexpr std::pair<int, int> slot_pair(int k) { return kSlotTable.pairs[static_cast<std::size_t>(k)]; }
inline constexpr int slot_index(int r, int c) { return c * (c - 1) / 2 + r; }  // requires r < c
inline constexpr int slot_count(int n) { return n * (n - 1) / 2; }

inline void require_enum_order(int n) {
    if (n < 1 || n > kMaxEnumVertices)
        throw std::invalid_argument("enumeration is capped at n <= " + std::to_string(kMaxEnumVertices) +
                                    ", got n = " + std::to_string(n));
}

// Edge bits packed so that slot k sits at bit (S-1-k): numeric order on
// keys then matches lexicographic order on graph6 encodings.
inline std::uint32_t graph_key(const VertexSet* adj, int n) {
    const int s = slot_count(n);
    std::uint32_t key = 0;
    for (int k = 0; k < s; ++k) {
        const auto [r, c] = slot_pair(k);
        if (adj[r] & vertex_bit(c)) key |= std::uint32_t{1} << (s - 1 - k);
    }
    return key;
}

inline Graph key_to_graph(std::uint32_t key, int n) {
    const int s = slot_count(n);
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < s; ++k)
        if (key & (std::uint32_t{1} << (s - 1 - k))) edges.push_back(slot_pair(k));
    return Graph::from_edges(n, edges);
}

inline std::vector<std::array<int, kMaxEnumVertices>> all_permutations(int n) {
    std::array<int, kMaxEnumVertices> p{};
    std::iota(p.begin(), p.begin() + n, 0);
    std::vector<std::array<int, kMaxEnumVertices>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));
    return out;
}

inline std::uint32_t apply_permutation(std::uint32_t key, int n, const std::array<int, kMaxEnumVertices>& perm) {
    const int s = slot_count(n);
    std::uint32_t out = 0;
    for (int k = 0; k < s; ++k) {
        if (!(key & (std::uint32_t{1} << (s - 1 - k)))) continue;
        const auto [r, c] = slot_pair(k);
        int rr = perm[static_cast<std::size_t>(r)];
        int cc = perm[static_cast<std::size_t>(c)];
        if (rr > cc) std::swap(rr, cc);
        out |= std::uint32_t{1} << (s - 1 - slot_index(rr, cc));
    }
    return out;
}

}  // namespace detail

// A fixed assignment of the first prefix_len pair slots. Bit j of
// prefix_bits is the presence of slot j. Tasks from partition_tasks are
// pairwise disjoint and jointly cover the whole space.
struct SearchTask {
    int n = 0;
    int prefix_len = 0;
    std::uint32_t prefix_bits = 0;
};

inline std::vector<SearchTask> partition_tasks(int n, int prefix_len) {
    detail::require_enum_order(n);
    const int s = detail::slot_count(n);
    if (prefix_len < 0 || prefix_len > s)
        throw std::invalid_argument("partition_tasks: prefix_len must be in [0, n(n-1)/2]");

    std::vector<SearchTask> tasks;
    VertexSet adj[detail::kMaxEnumVertices] = {};
    auto walk = [&](auto&& self, int k, std::uint32_t bits) -> void {
        if (k == prefix_len) {
            tasks.push_back({n, prefix_len, bits});
            return;
        }
        self(self, k + 1, bits);
        const auto [r, c] = detail::slot_pair(k);
        if (!detail::creates_diamond_on_add(adj, r, c)) {
            adj[r] |= vertex_bit(c);
            adj[c] |= vertex_bit(r);
            self(self, k + 1, bits | (std::uint32_t{1} << k));
            adj[r] &= ~vertex_bit(c);
            adj[c] &= ~vertex_bit(r);
        }
    };
    walk(walk, 0, 0);
    return tasks;
}

// Visit every K4^--free labeled graph in the task's subtree.
// The visitor receives (rows, n, edge_count).
template <typename Visitor>
inline void for_each_k4_minus_free(const SearchTask& task, Visitor&& visit) {
    detail::require_enum_order(task.n);
    const int s = detail::slot_count(task.n);
    if (task.prefix_len < 0 || task.prefix_len > s) throw std::invalid_argument("invalid task prefix length");

    VertexSet adj[detail::kMaxEnumVertices] = {};
    int m = 0;
    for (int k = 0; k < task.prefix_len; ++k) {
        if (!(task.prefix_bits & (std::uint32_t{1} << k))) continue;
        const auto [r, c] = detail::slot_pair(k);
        if (detail::creates_diamond_on_add(adj, r, c)) return;  // pruned prefix: empty task
        adj[r] |= vertex_bit(c);
        adj[c] |= vertex_bit(r);
        ++m;
    }

    auto descend = [&](auto&& self, int k) -> void {
        if (k == s) {
            visit(static_cast<const VertexSet*>(adj), task.n, m);
            return;
        }
        const auto [r, c] = detail::slot_pair(k);
        self(self, k + 1);
        if (!detail::creates_diamond_on_add(adj, r, c)) {
            adj[r] |= vertex_bit(c);
            adj[c] |= vertex_bit(r);
            ++m;
            self(self, k + 1);
            adj[r] &= ~vertex_bit(c);
            adj[c] &= ~vertex_bit(r);
            --m;
        }
    };
    descend(descend, task.prefix_len);
}

template <typename Visitor>
inline void for_each_k4_minus_free(int n, Visitor&& visit) {
    for_each_k4_minus_free(SearchTask{n, 0, 0}, std::forward<Visitor>(visit));
}

namespace detail {

inline int default_prefix_len(int n) {
    const int s = slot_count(n);
    return std::min(8, std::max(0, s - 4));
}

}  // namespace detail

struct EnumerateOptions {
    bool dedup = true;
    int cert_cap = 100;  // negative means unlimited
    int workers = 1;
    CheckerMode mode = CheckerMode::fast;
};

struct SizeCensus {
    long long labeled_count = 0;
    long long unlabeled_count = 0;
    std::vector<std::string> certificates;  // one canonical graph6 per class, capped
};

struct SpectrumReport {
    int n = 0;
    CheckerMode mode = CheckerMode::fast;
    bool dedup = false;
    std::map<int, SizeCensus> sizes;
};

// Minimum graph6 encoding over all n! vertex relabelings.
inline std::string canonical_form(const Graph& g) {
    detail::require_enum_order(g.order());
    const int n = g.order();
    const std::uint32_t original = detail::graph_key(g.rows(), n);
    std::uint32_t best = original;
    for (const auto& perm : detail::all_permutations(n))
        best = std::min(best, detail::apply_permutation(original, n, perm));
    return graph6_encode(detail::key_to_graph(best, n));
}

inline SpectrumReport enumerate_saturated(int n, const EnumerateOptions& opts = {}) {
    detail::require_enum_order(n);

    const std::vector<SearchTask> tasks = partition_tasks(n, detail::default_prefix_len(n));

    struct WorkerState {
        std::array<long long, detail::kMaxSlots + 1> labeled{};
        std::vector<std::uint32_t> saturated_keys;
    };
    const int workers = std::max(1, opts.workers);
    std::vector<WorkerState> states(static_cast<std::size_t>(workers));

    const bool keep_keys = opts.dedup;
    detail::parallel_for_index(tasks.size(), workers, [&](std::size_t task_index, int worker) {
        WorkerState& st = states[static_cast<std::size_t>(worker)];
        for_each_k4_minus_free(tasks[task_index], [&](const VertexSet* adj, int nn, int m) {
            bool saturated = false;
            switch (opts.mode) {
                case CheckerMode::fast:
                    saturated = detail::is_saturated_rows(adj, nn, nullptr, nullptr);
                    break;
                case CheckerMode::naive: {
                    const Graph g = detail::key_to_graph(detail::graph_key(adj, nn), nn);
                    saturated = naive_is_saturated(g).saturated;
                    break;
                }
                case CheckerMode::both: {
                    const Graph g = detail::key_to_graph(detail::graph_key(adj, nn), nn);
                    const SaturationVerdict fast = is_k4_minus_saturated(g);
                    const SaturationVerdict naive = naive_is_saturated(g);
                    if (!(fast == naive))
                        throw std::logic_error("checker disagreement on " + graph6_encode(g));
                    saturated = fast.saturated;
                    break;
                }
            }
            if (saturated) {
                ++st.labeled[static_cast<std::size_t>(m)];
                if (keep_keys) st.saturated_keys.push_back(detail::graph_key(adj, nn));
            }
        });
    });

    SpectrumReport report;
    report.n = n;
    report.mode = opts.mode;
    report.dedup = opts.dedup;

    std::array<long long, detail::kMaxSlots + 1> labeled{};
    std::vector<std::uint32_t> keys;
    for (const auto& st : states) {
        for (std::size_t m = 0; m < labeled.size(); ++m) labeled[m] += st.labeled[m];
        keys.insert(keys.end(), st.saturated_keys.begin(), st.saturated_keys.end());
    }
    for (std::size_t m = 0; m < labeled.size(); ++m)
        if (labeled[m] > 0) report.sizes[static_cast<int>(m)].labeled_count = labeled[m];

    if (opts.dedup) {
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
            throw std::logic_error("enumeration visited a graph twice");
        std::unordered_set<std::uint32_t> pool(keys.begin(), keys.end());
        const auto perms = detail::all_permutations(n);
        std::array<long long, detail::kMaxSlots + 1> orbit_total{};
        for (const std::uint32_t key : keys) {
            if (!pool.contains(key)) continue;  // consumed by an earlier orbit
            std::set<std::uint32_t> orbit;
            for (const auto& perm : perms) orbit.insert(detail::apply_permutation(key, n, perm));
            if (*orbit.begin() != key) throw std::logic_error("orbit representative is not canonical");
            for (const std::uint32_t img : orbit)
                if (pool.erase(img) == 0) throw std::logic_error("enumeration missed a relabeling");
            const int m = set_size(key);
            SizeCensus& census = report.sizes.at(m);
            ++census.unlabeled_count;
            orbit_total[static_cast<std::size_t>(m)] += static_cast<long long>(orbit.size());
            if (opts.cert_cap < 0 || static_cast<int>(census.certificates.size()) < opts.cert_cap)
                census.certificates.push_back(graph6_encode(detail::key_to_graph(key, n)));
        }
        for (const auto& [m, census] : report.sizes)
            if (orbit_total[static_cast<std::size_t>(m)] != census.labeled_count)
                throw std::logic_error("orbit sizes do not add up to the labeled census");
    }
    return report;
}

struct SweepOutcome {
    bool ok = true;
    long long leaves = 0;                    // K4^--free graphs scanned
    long long nonbipartite = 0;              // among scanned leaves
    long long saturated_nonbipartite = 0;
    std::vector<std::string> counterexamples;            // dense check: classes above threshold
    std::vector<std::string> neighbor_bound_violations;  // bounds check: e(v, V(C)) > t
    std::vector<std::string> size_bound_violations;      // bounds check: e(G) > threshold - (t-1)^2
};

// Every saturated non-bipartite class must sit at or below the bipartite
// threshold. Runs on the deduplicated census (the properties checked are
// isomorphism-invariant).
inline SweepOutcome check_dense_saturated_bipartite(int n, int workers = 1) {
    EnumerateOptions opts;
    opts.dedup = true;
    opts.cert_cap = -1;
    opts.workers = workers;
    const SpectrumReport report = enumerate_saturated(n, opts);

    SweepOutcome out;
    const long long threshold = bipartite_threshold(n);
    for (const auto& [m, census] : report.sizes) {
        for (const std::string& cert : census.certificates) {
            const Graph g = graph6_decode(cert);
            ++out.leaves;
            if (is_bipartite(g).bipartite) continue;
            ++out.nonbipartite;
            ++out.saturated_nonbipartite;
            if (m > threshold) out.counterexamples.push_back(cert);
        }
    }
    std::sort(out.counterexamples.begin(), out.counterexamples.end());
    out.ok = out.counterexamples.empty();
    return out;
}

// Odd-cycle bounds over the full K4^--free space: every non-bipartite leaf
// must satisfy the odd-cycle neighbor bound e(v, V(C)) <= t, and every
// saturated non-bipartite leaf must satisfy
// e(G) <= threshold(n) - (t-1)^2. With scan_all false only saturated
// leaves are examined.
inline SweepOutcome check_odd_cycle_bounds(int n, int workers = 1, bool scan_all = true) {
    detail::require_enum_order(n);
    const std::vector<SearchTask> tasks = partition_tasks(n, detail::default_prefix_len(n));
    const long long threshold = bipartite_threshold(n);

    struct WorkerState {
        long long leaves = 0;
        long long nonbipartite = 0;
        long long saturated_nonbipartite = 0;
        std::vector<std::string> neighbor_violations;
        std::vector<std::string> size_violations;
    };
    const int workers_clamped = std::max(1, workers);
    std::vector<WorkerState> states(static_cast<std::size_t>(workers_clamped));

    detail::parallel_for_index(tasks.size(), workers_clamped, [&](std::size_t task_index, int worker) {
        WorkerState& st = states[static_cast<std::size_t>(worker)];
        for_each_k4_minus_free(tasks[task_index], [&](const VertexSet* adj, int nn, int m) {
            ++st.leaves;
            if (detail::two_color(adj, nn, nullptr)) return;
            ++st.nonbipartite;
            const bool saturated = detail::is_saturated_rows(adj, nn, nullptr, nullptr);
            if (saturated) ++st.saturated_nonbipartite;
            if (!scan_all && !saturated) return;

            VertexSet cycle_mask = 0;
            int t = 0;
            if (!detail::odd_cycle_mask(adj, nn, &cycle_mask, &t))
                throw std::logic_error("non-bipartite leaf has no odd cycle");
            bool neighbor_bad = false;
            for (int v = 0; v < nn && !neighbor_bad; ++v) {
                if (cycle_mask & vertex_bit(v)) continue;
                if (set_size(adj[v] & cycle_mask) > t) neighbor_bad = true;
            }
            const bool size_bad = saturated && m > threshold - static_cast<long long>(t - 1) * (t - 1);
            if (neighbor_bad || size_bad) {
                const std::string cert = graph6_encode(detail::key_to_graph(detail::graph_key(adj, nn), nn));
                if (neighbor_bad) st.neighbor_violations.push_back(cert);
                if (size_bad) st.size_violations.push_back(cert);
            }
        });
    });

    SweepOutcome out;
    for (const auto& st : states) {
        out.leaves += st.leaves;
        out.nonbipartite += st.nonbipartite;
        out.saturated_nonbipartite += st.saturated_nonbipartite;
        out.neighbor_bound_violations.insert(out.neighbor_bound_violations.end(), st.neighbor_violations.begin(),
                                             st.neighbor_violations.end());
        out.size_bound_violations.insert(out.size_bound_violations.end(), st.size_violations.begin(),
                                         st.size_violations.end());
    }
    std::sort(out.neighbor_bound_violations.begin(), out.neighbor_bound_violations.end());
    std::sort(out.size_bound_violations.begin(), out.size_bound_violations.end());
    out.ok = out.neighbor_bound_violations.empty() && out.size_bound_violations.empty();
    return out;
}

}  // namespace k4sat
