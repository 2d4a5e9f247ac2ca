#pragma once

// Short-form graph6 (n <= 62) and a plain edge-list text format.
//
// graph6 layout: one header byte n+63, then the upper triangle of the
// adjacency matrix as a bit vector in column order
//   (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
// packed big-endian into 6-bit groups, zero padded, each group offset
// by 63 so every byte is printable. Reference vector: the 5-vertex graph
// with edges 02, 04, 13, 34 encodes to bytes 68 81 99, i.e. "DQc".

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k4sat/graph.hpp"

namespace k4sat {

inline std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.reserve(1 + static_cast<std::size_t>(n * (n - 1) / 2 + 5) / 6);
    out.push_back(static_cast<char>(63 + n));
    int group = 0;
    int bits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (group << (6 - bits))));
    return out;
}

inline Graph graph6_decode(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw FormatError("graph6: empty input");

    const unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == 126) throw FormatError("graph6: long form (n > 62) not supported");
    if (head < 63 || head > 126) throw FormatError("graph6: header byte outside 63..126");
    const int n = head - 63;
    if (n < 1) throw FormatError("graph6: zero-vertex graph not supported");

    const int nbits = n * (n - 1) / 2;
    const std::size_t payload = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - 1 < payload) throw FormatError("graph6: truncated payload");
    if (text.size() - 1 > payload) throw FormatError("graph6: trailing bytes after payload");

    std::vector<std::pair<int, int>> edges;
    int row = 0;
    int col = 1;
    for (std::size_t i = 0; i < payload; ++i) {
        const unsigned char byte = static_cast<unsigned char>(text[1 + i]);
        if (byte < 63 || byte > 126) throw FormatError("graph6: payload byte outside 63..126");
        const int group = byte - 63;
        for (int bit = 5; bit >= 0; --bit) {
            if (col >= n) {
                if (group & (1 << bit)) throw FormatError("graph6: nonzero padding bits");
                continue;
            }
            if (group & (1 << bit)) edges.emplace_back(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return Graph::from_edges(n, edges);
}

// Edge-list text: first line "n m", then m lines "u v", 0-based labels.
inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& [u, v] : g.edge_list()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline Graph parse_edge_list(std::string_view text) {
    struct Cursor {
        std::string_view rest;
        long long next() {
            std::size_t i = 0;
            while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t' || rest[i] == '\n' || rest[i] == '\r')) ++i;
            rest.remove_prefix(i);
            if (rest.empty()) throw FormatError("edge list: unexpected end of input");
            bool neg = rest[0] == '-';
            std::size_t j = neg ? 1 : 0;
            long long value = 0;
            std::size_t digits = 0;
            while (j < rest.size() && rest[j] >= '0' && rest[j] <= '9') {
                value = value * 10 + (rest[j] - '0');
                ++j;
                ++digits;
                if (value > 1'000'000) throw FormatError("edge list: number too large");
            }
            if (digits == 0) throw FormatError("edge list: expected an integer");
            rest.remove_prefix(j);
            return neg ? -value : value;
        }
        bool at_end() {
            for (char c : rest)
                if (c != ' ' && c != '\t' && c != '\n' && c != '\r') return false;
            return true;
        }
    };

    Cursor cur{text};
    const long long n = cur.next();
    const long long m = cur.next();
    if (m < 0) throw FormatError("edge list: negative edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        const long long u = cur.next();
        const long long v = cur.next();
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!cur.at_end()) throw FormatError("edge list: trailing data after last edge");
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace k4sat
