#include <catch2/catch.hpp>

#include <random>

#include "k4sat/graph.hpp"
#include "k4sat/graph6.hpp"
#include "test_support.hpp"

using namespace k4sat;

TEST_CASE("graph6 fixed vectors") {
    // The published reference: 5 vertices, edges 02 04 13 34 -> bytes 68 81 99.
    const Graph ref = Graph::from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}});
    CHECK(graph6_encode(ref) == "DQc");
    CHECK(graph6_decode("DQc") == ref);

    CHECK(graph6_encode(Graph::empty(1)) == "@");
    CHECK(graph6_encode(Graph::complete(2)) == "A_");
    CHECK(graph6_encode(Graph::empty(2)) == "A?");
    CHECK(graph6_encode(Graph::from_edges(3, {{0, 1}, {1, 2}})) == "Bg");
    CHECK(graph6_encode(Graph::complete(3)) == "Bw");
    CHECK(graph6_encode(Graph::complete(4)) == "C~");
}

TEST_CASE("graph6 agrees with an independent encoder") {
    std::mt19937 rng(40901);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 62);
        const Graph g = testsupport::random_graph(n, 0.1 + 0.08 * (trial % 10), rng);
        CHECK(graph6_encode(g) == testsupport::reference_graph6(g));
    }
}

TEST_CASE("graph6 round trip is the identity") {
    std::mt19937 rng(40902);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 62);
        const Graph g = testsupport::random_graph(n, 0.5, rng);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    const Graph dense = Graph::complete(62);
    CHECK(graph6_decode(graph6_encode(dense)) == dense);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), FormatError);
    CHECK_THROWS_AS(graph6_decode("?"), FormatError);          // zero vertices
    CHECK_THROWS_AS(graph6_decode("~??"), FormatError);        // long form
    CHECK_THROWS_AS(graph6_decode("D"), FormatError);          // truncated payload
    CHECK_THROWS_AS(graph6_decode("DQcQ"), FormatError);       // trailing bytes
    CHECK_THROWS_AS(graph6_decode("B\x20"), FormatError);      // payload byte < 63
    CHECK_THROWS_AS(graph6_decode(std::string("B") + char(127)), FormatError);
    CHECK_THROWS_AS(graph6_decode("Bq"), FormatError);         // nonzero padding bits
}

TEST_CASE("graph6 accepts the optional file header and trailing newline") {
    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(graph6_decode(">>graph6<<Bg") == p3);
    CHECK(graph6_decode("Bg\n") == p3);
    CHECK(graph6_decode("Bg\r\n") == p3);
}

TEST_CASE("edge list text format") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const std::string text = to_edge_list(g);
    CHECK(text == "4 4\n0 1\n0 3\n1 2\n2 3\n");
    CHECK(parse_edge_list(text) == g);

    CHECK(parse_edge_list("1 0\n") == Graph::empty(1));
    CHECK_THROWS_AS(parse_edge_list(""), FormatError);
    CHECK_THROWS_AS(parse_edge_list("4 2\n0 1\n"), FormatError);          // fewer edges than claimed
    CHECK_THROWS_AS(parse_edge_list("4 1\n0 1\n2 3\n"), FormatError);     // trailing data
    CHECK_THROWS_AS(parse_edge_list("4 1\n0 9\n"), FormatError);          // vertex out of range
    CHECK_THROWS_AS(parse_edge_list("4 1\nx y\n"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("4 -1\n"), FormatError);
}

TEST_CASE("edge list round trip on random graphs") {
    std::mt19937 rng(40903);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 30);
        const Graph g = testsupport::random_graph(n, 0.4, rng);
        CHECK(parse_edge_list(to_edge_list(g)) == g);
    }
}
