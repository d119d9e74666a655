#include <doctest.h>

#include <random>

#include "ckgraph/edge_operator.hpp"
#include "ckgraph/errors.hpp"
#include "ckgraph/ihara_zeta.hpp"
#include "oracles.hpp"

using namespace ckgraph;

namespace {

// det(1 - u·A) by Laplace expansion of the definition-built matrix.
IntPolynomial charpoly_by_cofactors(const Multigraph& g) {
    const IntMatrix a = oracle::edge_matrix(g);
    PolyMatrix p(a.rows(), std::vector<IntPolynomial>(a.rows()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            p[i][j] = IntPolynomial(IntVector{Integer(i == j ? 1 : 0), -a(i, j)});
    return oracle::determinant(p);
}

}  // namespace

TEST_CASE("flower(2)") {
    const Multigraph g = generate_flower(2);
    const IntPolynomial expected{1, -4, 2, 4, -3};
    CHECK(charpoly_by_cofactors(g) == expected);
    CHECK(edge_charpoly(g) == expected);
    CHECK(ihara_rhs(g) == expected);
    const ZetaReport r = zeta_report(g);
    CHECK(r.identity_holds);
    CHECK(r.ord_at_one == 2);
}

TEST_CASE("flower(g) closed form") {
    // (1 - u^2)^(g-1) (1 - 2g u + (2g-1) u^2) for one vertex of valence 2g.
    for (std::size_t g = 1; g <= 5; ++g) {
        const long gl = static_cast<long>(g);
        const IntPolynomial expected =
            IntPolynomial{1, 0, -1}.pow(g - 1) * IntPolynomial{1, -2 * gl, 2 * gl - 1};
        CHECK(edge_charpoly(generate_flower(g)) == expected);
    }
}

TEST_CASE("cycles") {
    CHECK(edge_charpoly(generate_cycle(3)) == IntPolynomial{1, 0, 0, -2, 0, 0, 1});
    const ZetaReport r = zeta_report(generate_cycle(3));
    CHECK(r.genus == 1);
    CHECK(r.identity_holds);
    CHECK(r.ord_at_one == 2);
}

TEST_CASE("trees and the zero polynomial are rejected") {
    const Multigraph tree(2, {{0, 1}});
    CHECK_THROWS_AS(zeta_report(tree), DomainError);
    CHECK_THROWS_AS(ihara_rhs(tree), DomainError);
    CHECK_THROWS_AS(verify_bass_identity(tree), DomainError);
    CHECK_THROWS_AS(vanishing_order_at_one(IntPolynomial{}), DomainError);
    CHECK(vanishing_order_at_one(IntPolynomial{1, -3, 3, -1}) == 3);
}

TEST_CASE("pendant edges lower the degree") {
    // Flower(2) with a two-edge tail: the four tail arcs contribute nothing.
    const Multigraph g(3, {{0, 0}, {0, 0}, {0, 1}, {1, 2}});
    const IntPolynomial p = edge_charpoly(g);
    CHECK(p == IntPolynomial{1, -4, 2, 4, -3});
    CHECK(p.degree() == 4);
}

TEST_CASE("bass identity and vanishing order over random graphs") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        const Multigraph g = oracle::random_graph(rng, 4, 3);
        if (2 * g.edge_count() > 8) continue;
        const std::size_t genus = betti_number(g);
        CAPTURE(to_text(g));
        const IntPolynomial p = edge_charpoly(g);
        CHECK(p == charpoly_by_cofactors(g));
        CHECK(p == ihara_rhs(g));
        CHECK(verify_bass_identity(g));
        const std::size_t corank =
            2 * g.edge_count() - matrix_rank(edge_matrix(g).one_minus_t());
        CHECK(vanishing_order_at_one(p) == (genus >= 2 ? genus : 2));
        CHECK(vanishing_order_at_one(p) == corank);
    }
}
