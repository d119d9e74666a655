#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "ckgraph/edge_operator.hpp"
#include "ckgraph/errors.hpp"
#include "ckgraph/ktheory.hpp"
#include "oracles.hpp"

using namespace ckgraph;

namespace {

IntVector ints(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Integer big(std::size_t x) { return Integer(static_cast<unsigned long>(x)); }

// Order of the image of the all-ones vector in Z^n / (1 - A)Z^n, found by
// trying λ = 1, 2, ... against the Smith decomposition of 1 - A.
std::optional<Integer> unit_order_by_search(const EdgeMatrix& em, long limit) {
    const auto s = smith_normal_form(em.one_minus_a());
    const IntVector c = s.X * IntVector(em.size(), Integer(1));
    const IntVector d = s.diagonal();
    for (long lambda = 1; lambda <= limit; ++lambda) {
        bool inside = true;
        for (std::size_t i = 0; i < c.size() && inside; ++i) {
            const Integer scaled = c[i] * lambda;
            inside = i < d.size() && d[i] != 0 ? scaled % d[i] == 0 : scaled == 0;
        }
        if (inside) return Integer(lambda);
    }
    return std::nullopt;
}

Multigraph with_pendant(const Multigraph& g) {
    auto edges = g.edges();
    edges.push_back({0, g.vertex_count()});
    return Multigraph(g.vertex_count() + 1, edges);
}

}  // namespace

TEST_CASE("K-theory of flower(3)") {
    const Multigraph g = generate_flower(3);
    CHECK(k0(g) == AbelianGroup{3, ints({2})});
    CHECK(k1(g).rank == 3);
    const UnitOrder u = unit_order(g);
    CHECK(u.order == Integer(2));
    CHECK(u.closed_form == Integer(2));
    const EdgeMatrix em = edge_matrix(g);
    CHECK(em.one_minus_a() * u.witness == IntVector(6, Integer(2)));
}

TEST_CASE("K-theory of theta(3) and flower(2)") {
    CHECK(k0(generate_theta(3)) == AbelianGroup{3, ints({2})});
    CHECK(unit_order(generate_theta(3)).order == Integer(1));
    CHECK(k0(generate_flower(2)) == AbelianGroup{2, {}});
    CHECK(unit_order(generate_flower(2)).order == Integer(1));
}

TEST_CASE("Betti number one") {
    const Multigraph c = generate_cycle(3);
    CHECK(k0(c) == AbelianGroup{2, {}});
    CHECK(k1(c).rank == 2);
    CHECK_FALSE(unit_order(c).order.has_value());
    CHECK_FALSE(unit_order(c).closed_form.has_value());

    // A pendant edge hanging off the cycle.
    const Multigraph g(4, {{0, 1}, {1, 2}, {2, 0}, {3, 1}});
    const auto [cycle_part, spread] = g1_kernel_generators(g);
    const IntMatrix t = edge_matrix(g).one_minus_t();
    CHECK((t * cycle_part) == IntVector(8, Integer(0)));
    CHECK((t * spread) == IntVector(8, Integer(0)));
    const IntMatrix both = IntMatrix::from_rows({cycle_part, spread}, 8);
    CHECK(lattice_basis(both) == k1(g).basis);
}

TEST_CASE("domain errors") {
    const Multigraph tree(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(k0(tree), DomainError);
    CHECK_THROWS_AS(unit_order(tree), DomainError);
    CHECK_THROWS_WITH(ktheory_report(tree), "g >= 1 required");
    CHECK_THROWS_AS(classify_stable(generate_cycle(2), generate_flower(2)), DomainError);
    CHECK_THROWS_AS(phi(generate_theta(2), {1, 0, 0}), DomainError);
    CHECK_THROWS_AS(closed_form_unit_order(1, 3), DomainError);
}

TEST_CASE("phi of a loop") {
    CHECK(phi(generate_flower(2), {1, 0}) == ints({1, 0, -1, 0}));
    CHECK(phi(generate_theta(2), {1, -1, 0}) == ints({1, -1, 0, -1, 1, 0}));
    CHECK(unit_class_is_one_vector(generate_theta(2)) == IntVector(6, Integer(1)));
    CHECK(phi_image_equals_kernel(generate_theta(4)));
}

TEST_CASE("simplicity flags") {
    CHECK(simplicity(edge_matrix(generate_flower(2))).simple());
    CHECK_FALSE(simplicity(edge_matrix(with_pendant(generate_flower(2)))).irreducible);
    CHECK(simplicity(edge_matrix(generate_cycle(4))).permutation);
}

TEST_CASE("automorphisms of Z/n act transitively on elements of equal order") {
    // Aut(Z/n) is multiplication by units; compare its orbits with the
    // partition by additive order.
    for (long n = 1; n <= 12; ++n) {
        std::vector<long> units;
        for (long k = 0; k < n; ++k)
            if (std::gcd(k, n) == 1) units.push_back(k);
        for (long x = 0; x < n; ++x) {
            std::set<long> orbit;
            for (long u : units) orbit.insert(u * x % n);
            std::set<long> same_order;
            const long order_x = n / std::gcd(x, n);
            for (long y = 0; y < n; ++y)
                if (n / std::gcd(y, n) == order_x) same_order.insert(y);
            CHECK(orbit == same_order);
        }
    }
}

TEST_CASE("unit position in the torsion summand") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const Multigraph g = oracle::random_graph(rng, 5, 5, 2);
        const std::size_t genus = betti_number(g);
        if (genus < 2) continue;
        const TorsionClass tc = unit_torsion_class(g);
        CHECK(tc.modulus == big(genus - 1));
        Integer gcd;
        mpz_gcd(gcd.get_mpz_t(), tc.modulus.get_mpz_t(), tc.residue.get_mpz_t());
        const Integer order = tc.modulus / gcd;
        CHECK(unit_order(g).order == order);
    }
}

TEST_CASE("unit order: solver, closed form and exhaustive search agree") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 150; ++trial) {
        const Multigraph g = oracle::random_graph(rng, 6, 5, 2);
        const std::size_t genus = betti_number(g);
        if (genus < 2) continue;
        CAPTURE(to_text(g));
        const UnitOrder u = unit_order(g);
        REQUIRE(u.order);
        CHECK(*u.order == closed_form_unit_order(genus, g.vertex_count()));
        CHECK(*u.order == closed_form_unit_order(genus, g.edge_count()));
        CHECK(unit_order_by_search(edge_matrix(g), static_cast<long>(genus)) == u.order);
    }
}

TEST_CASE("K-theory property over random graphs") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        const Multigraph g = oracle::random_graph(rng, 6, 5);
        const std::size_t genus = betti_number(g);
        CAPTURE(to_text(g));
        CHECK(k0(g) == AbelianGroup::from_cyclic_factors(genus, {big(genus - 1)}));
        const K1Result r = k1(g);
        CHECK(r.rank == (genus >= 2 ? genus : 2));
        CHECK((edge_matrix(g).one_minus_t() * r.basis.transposed()).is_zero());
        if (genus >= 2) CHECK(phi_image_equals_kernel(g));
    }
}

TEST_CASE("contraction transcript of flower(2) and theta(3)") {
    const ReductionTranscript f = contraction_reduce(generate_flower(2));
    CHECK(f.contraction_order.empty());
    CHECK(f.final_diagonal == ints({1, 1, 0, 0}));
    CHECK(f.unit_image[1] == 2);
    CHECK(f.unit_image[2] == 0);
    CHECK(f.unit_image[3] == 0);

    const ReductionTranscript t2 = contraction_reduce(generate_theta(2));
    CHECK(t2.contraction_order.size() == 1);
    CHECK(t2.unit_image[t2.unit_image.size() - 3] == 4);

    const ReductionTranscript t = contraction_reduce(generate_theta(3));
    CHECK(t.contraction_order == std::vector<std::size_t>{0});
    CHECK(t.final_diagonal == ints({1, 1, 1, 1, 2, 0, 0, 0}));
    CHECK(t.unit_image[4] == 6);
    const IntMatrix replayed = t.replay();
    CHECK(replayed.is_diagonal());
    CHECK(t.replay_unit() == t.unit_image);
    CHECK(to_string(t).find("# final diagonal: [1, 1, 1, 1, 2, 0, 0, 0]") != std::string::npos);
}

TEST_CASE("transcript invariants over random graphs and contraction orders") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 80; ++trial) {
        const Multigraph g = oracle::random_graph(rng, 6, 4, 2);
        const std::size_t genus = betti_number(g);
        if (genus < 2) continue;
        CAPTURE(to_text(g));
        const ReductionTranscript t = contraction_reduce(g, rng());
        const std::size_t n = t.pivot_order.size();
        CHECK(t.final_diagonal[n - genus - 1] == big(genus - 1));
        CHECK(t.unit_image[n - genus - 1] == big(genus * g.vertex_count()));
        for (std::size_t i = n - genus; i < n; ++i) CHECK(t.unit_image[i] == 0);
        const IntMatrix replayed = t.replay();
        for (std::size_t i = 0; i < n; ++i)
            CHECK(replayed(t.pivot_order[i], t.pivot_order[i]) == t.final_diagonal[i]);
        CHECK(t.replay_unit() == t.unit_image);
    }
}

TEST_CASE("classification examples") {
    const Multigraph f3 = generate_flower(3), t3 = generate_theta(3);
    CHECK(classify_stable(f3, t3).verdict == Verdict::Equivalent);
    CHECK(classify_strict(f3, t3).verdict == Verdict::NotIsomorphic);
    CHECK(classify_strict(f3, f3).verdict == Verdict::Isomorphic);
    CHECK(classify_stable(f3, generate_flower(4)).verdict == Verdict::NotEquivalent);
    CHECK(classify_strict(f3, generate_flower(4)).verdict == Verdict::NotIsomorphic);
    // theta(4): order 3 = flower(4)'s order.
    CHECK(classify_strict(generate_theta(4), generate_flower(4)).verdict == Verdict::Isomorphic);

    const Classification c = classify_strict(with_pendant(f3), f3);
    CHECK(c.verdict == Verdict::Indeterminate);
    CHECK(c.simplicity_caveat);
    CHECK(classify_stable(with_pendant(f3), f3).simplicity_caveat);
    CHECK(to_string(Verdict::NotEquivalent) == "NOT_EQUIVALENT");
}

TEST_CASE("strict isomorphism is not invariant under contraction") {
    // chain(7): unit orders along the contraction stages.
    std::set<Integer> orders;
    const auto stages = contraction_stages(generate_chain(7));
    for (const auto& s : stages) {
        orders.insert(*unit_order(s).order);
        CHECK(classify_stable(s, stages.front()).verdict == Verdict::Equivalent);
    }
    CHECK(orders == std::set<Integer>{1, 2, 3, 6});
}

TEST_CASE("boundary compatibility") {
    CHECK(boundary_algebra_compatible(generate_flower(5)));
    CHECK_FALSE(boundary_algebra_compatible(generate_theta(3)));
    CHECK(boundary_algebra_compatible(generate_theta(4)));
}

TEST_CASE("report") {
    const KTheoryReport r = ktheory_report(generate_theta(3));
    CHECK(r.genus == 3);
    CHECK(r.vertex_count == 2);
    CHECK(r.edge_count == 4);
    CHECK(r.k1_rank == 3);
    CHECK(r.unit.order == Integer(1));
    CHECK(r.simplicity.simple());
}
