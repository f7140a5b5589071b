#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddcover/graph.hpp"
#include "oddcover/rng.hpp"
#include "oracles.hpp"

using namespace oddcover;

TEST_CASE("builders") {
    const Graph k3 = Graph::complete(3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(0, 2));

    const Graph c4 = Graph::cycle(4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.has_edge(3, 0));
    CHECK_FALSE(c4.has_edge(0, 2));

    CHECK(Graph::empty(5).edge_count() == 0);
    CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 3}}), std::out_of_range);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("adjacency stays symmetric and loop-free") {
    SplitMix64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracles::random_graph(2 + rng.below(14), rng);
        for (std::size_t u = 0; u < g.size(); ++u) {
            CHECK_FALSE(g.has_edge(u, u));
            for (std::size_t v = 0; v < g.size(); ++v)
                CHECK(g.has_edge(u, v) == g.has_edge(v, u));
        }
    }
}

TEST_CASE("disjoint union") {
    const Graph two_k3 = disjoint_union({Graph::complete(3), Graph::complete(3)});
    CHECK(two_k3.size() == 6);
    CHECK(two_k3.edge_count() == 6);
    CHECK_FALSE(two_k3.has_edge(0, 3));

    CHECK(disjoint_union({Graph::complete(2)}) == Graph::complete(2));

    const Graph mix = disjoint_union({Graph::cycle(3), Graph::cycle(4), Graph::cycle(5)});
    CHECK(mix.size() == 12);
    CHECK(mix.adjacency().rank() == 8); // 2 + 2 + 4
}

TEST_CASE("symmetric difference") {
    SplitMix64 rng(5);
    const Graph g = oracles::random_graph(9, rng);
    const Graph h = oracles::random_graph(9, rng);
    const Graph i = oracles::random_graph(9, rng);

    CHECK(sym_diff(g, g).edge_count() == 0);
    CHECK(sym_diff(g, Graph::empty(9)) == g);
    CHECK(sym_diff(g, h) == sym_diff(h, g));
    CHECK(sym_diff(sym_diff(g, h), i) == sym_diff(g, sym_diff(h, i)));

    // Padding: the smaller operand sits on the low indices.
    const Graph padded = sym_diff(Graph::complete(3), Graph::empty(7));
    CHECK(padded.size() == 7);
    CHECK(padded.edge_count() == 3);
}

TEST_CASE("a triangle chained with two 4-cycles is C_7") {
    // The ladder that turns an odd cycle cover into a longer one, read
    // as graphs: C_7 = C_3 on {2,3,4} xor (1-2-4-5) xor (0-1-5-6).
    Graph triangle(7);
    triangle.add_edge(2, 3);
    triangle.add_edge(3, 4);
    triangle.add_edge(2, 4);
    const Graph q1 = Graph::from_edges(7, {{1, 2}, {2, 4}, {4, 5}, {5, 1}});
    const Graph q2 = Graph::from_edges(7, {{0, 1}, {1, 5}, {5, 6}, {6, 0}});
    CHECK(sym_diff(sym_diff(triangle, q1), q2) == Graph::cycle(7));
}

TEST_CASE("even cores of named graphs") {
    SUBCASE("K_5 has exactly one even core, the full vertex set") {
        const EvenCores ec = even_cores(Graph::complete(5));
        REQUIRE(ec.cores.size() == 1);
        CHECK_FALSE(ec.truncated);
        CHECK(ec.cores[0].count() == 5);
    }
    SUBCASE("K_4 has none") {
        CHECK(even_cores(Graph::complete(4)).cores.empty());
    }
    SUBCASE("C_5 has exactly one, the whole cycle") {
        const EvenCores ec = even_cores(Graph::cycle(5));
        REQUIRE(ec.cores.size() == 1);
        CHECK(ec.cores[0].count() == 5);
    }
    SUBCASE("C_4 has three") {
        CHECK(even_cores(Graph::cycle(4)).cores.size() == 3);
    }
}

TEST_CASE("every enumerated core passes direct parity counting") {
    SplitMix64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracles::random_graph(1 + rng.below(12), rng);
        const EvenCores ec = even_cores(g);
        const std::size_t dim = g.size() - g.adjacency().rank();
        if (!ec.truncated)
            CHECK(ec.cores.size() + 1 == (std::size_t{1} << dim));
        for (const auto& s : ec.cores) CHECK(oracles::is_even_core(g, s));
    }
}

TEST_CASE("core enumeration cap falls back to the basis") {
    // 24 isolated vertices: kernel dimension 24 exceeds a cap of 4.
    const EvenCores ec = even_cores(Graph::empty(24), 4);
    CHECK(ec.truncated);
    CHECK(ec.cores.size() == 24);
}

TEST_CASE("rank via adjacent twins") {
    CHECK(rank_via_twins(Graph::complete(4)) == 4);
    CHECK(rank_via_twins(Graph::complete(5)) == 4);
    CHECK(rank_via_twins(Graph::cycle(6)) == 4); // no twins; elimination path

    SplitMix64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Graph g = oracles::random_graph(1 + rng.below(16), rng,
                                              static_cast<unsigned>(32 + rng.below(200)));
        CHECK(rank_via_twins(g) == g.adjacency().rank());
    }
}
