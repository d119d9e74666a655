#include <doctest.h>

#include <random>

#include "ckgraph/edge_operator.hpp"
#include "oracles.hpp"

using namespace ckgraph;

TEST_CASE("oriented edge indexing") {
    const Multigraph g(2, {{0, 1}, {1, 1}});
    const auto oe = oriented_edges(g);
    REQUIRE(oe.size() == 4);
    CHECK(oe[0] == OrientedEdge{0, 0, 1});
    CHECK(oe[2] == OrientedEdge{2, 1, 0});
    CHECK(oe[3] == OrientedEdge{3, 1, 1});
    CHECK(reversal(0, 2) == 2);
    CHECK(reversal(3, 2) == 1);
}

TEST_CASE("edge matrix of flower(2)") {
    // Order a1, a2, ā1, ā2; every arc may follow every other except its reversal.
    const EdgeMatrix m = edge_matrix(generate_flower(2));
    CHECK(m.a == IntMatrix{{1, 1, 0, 1}, {1, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}});
    CHECK(m.one_minus_a() == IntMatrix::identity(4) - m.a);
    CHECK(m.one_minus_t() == IntMatrix::identity(4) - m.a.transposed());
    CHECK(is_irreducible(m));
    CHECK_FALSE(is_permutation(m));
}

TEST_CASE("edge matrix of a single loop is the identity") {
    const EdgeMatrix m = edge_matrix(generate_flower(1));
    CHECK(m.a == IntMatrix::identity(2));
    CHECK(is_permutation(m));
    CHECK_FALSE(is_irreducible(m));
}

TEST_CASE("cycles give two-orbit permutations") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const EdgeMatrix m = edge_matrix(generate_cycle(n));
        CHECK(is_permutation(m));
        CHECK_FALSE(is_irreducible(m));
    }
}

TEST_CASE("edge matrix matches the definition and the closure oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const Multigraph g = oracle::random_graph(rng, 6, 4, 0);
        const EdgeMatrix m = edge_matrix(g);
        CAPTURE(to_text(g));
        REQUIRE(m.a == oracle::edge_matrix(g));
        CHECK(m.edge_count == g.edge_count());
        CHECK(is_irreducible(m) == oracle::strongly_connected(m.a));
    }
}

TEST_CASE("serializations") {
    const EdgeMatrix m = edge_matrix(generate_flower(1));
    CHECK(edge_matrix_json(m) == "[[1,0],[0,1]]");
    CHECK(edge_matrix_coordinates(m) == "2\n0 0\n1 1\n");
}
