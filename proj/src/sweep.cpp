#include "ckgraph/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ckgraph/errors.hpp"
#include "ckgraph/exact_linalg.hpp"
#include "ckgraph/ihara_zeta.hpp"
#include "ckgraph/ktheory.hpp"

namespace ckgraph {

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using EdgeKey = std::vector<std::pair<std::size_t, std::size_t>>;

EdgeKey relabeled_key(const Multigraph& g, const std::vector<std::size_t>& perm) {
    EdgeKey key;
    key.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        const std::size_t a = perm[e.u], b = perm[e.v];
        key.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

Multigraph canonical_form(const Multigraph& g) {
    std::vector<std::size_t> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    EdgeKey best = relabeled_key(g, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        EdgeKey key = relabeled_key(g, perm);
        if (key < best) best = std::move(key);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : best) edges.push_back({u, v});
    return Multigraph(g.vertex_count(), std::move(edges));
}

std::vector<Multigraph> enumerate_connected_multigraphs(std::size_t max_vertices,
                                                        std::size_t max_edges,
                                                        std::size_t min_genus) {
    std::vector<Multigraph> out;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        std::vector<Edge> slots;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u; v < n; ++v) slots.push_back({u, v});

        std::set<EdgeKey> seen;
        // Multisets of slots as nondecreasing index sequences.
        for (std::size_t m = (n + min_genus > 1 ? n + min_genus - 1 : 0); m <= max_edges; ++m) {
            std::vector<std::size_t> pick(m, 0);
            for (;;) {
                std::vector<Edge> edges;
                edges.reserve(m);
                for (std::size_t s : pick) edges.push_back(slots[s]);
                Multigraph g(n, std::move(edges));
                if (g.is_connected() && betti_number(g) >= min_genus) {
                    Multigraph c = canonical_form(g);
                    EdgeKey key;
                    for (const Edge& e : c.edges()) key.emplace_back(e.u, e.v);
                    if (seen.insert(std::move(key)).second) out.push_back(std::move(c));
                }
                // Advance to the next nondecreasing sequence.
                std::size_t i = m;
                while (i > 0 && pick[i - 1] == slots.size() - 1) --i;
                if (i == 0) break;
                const std::size_t next = pick[i - 1] + 1;
                for (std::size_t j = i - 1; j < m; ++j) pick[j] = next;
            }
        }
    }
    return out;
}

Multigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t max_vertices,
                                       std::size_t max_edges, std::size_t min_genus) {
    if (max_edges < min_genus) throw DomainError("edge bound below the requested genus");
    // n - 1 + min_genus <= max_edges keeps the genus reachable.
    const std::size_t n_cap = std::min(max_vertices, max_edges + 1 - min_genus);
    if (n_cap == 0) throw DomainError("vertex bound must be positive");
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, n_cap)(rng);
    const std::size_t m =
        std::uniform_int_distribution<std::size_t>(n - 1 + min_genus, max_edges)(rng);

    auto coin = [&] { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) {
        const std::size_t w = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
        edges.push_back(coin() ? Edge{v, w} : Edge{w, v});
    }
    std::uniform_int_distribution<std::size_t> any_vertex(0, n - 1);
    while (edges.size() < m) edges.push_back({any_vertex(rng), any_vertex(rng)});

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::shuffle(edges.begin(), edges.end(), rng);
    for (Edge& e : edges) e = {perm[e.u], perm[e.v]};
    return Multigraph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Invariant checks

GraphCase::GraphCase(Multigraph g)
    : graph(std::move(g)), genus(betti_number(graph)), matrix(edge_matrix(graph)) {}

namespace {

using Status = CheckOutcome::Status;

IntVector expected_smith_diagonal(std::size_t m, std::size_t genus) {
    IntVector entries(2 * m - genus - 1, Integer(1));
    entries.push_back(Integer(static_cast<unsigned long>(genus - 1)));
    entries.insert(entries.end(), genus, Integer(0));
    return canonical_smith_diagonal(entries);
}

AbelianGroup expected_k0(std::size_t genus) {
    return AbelianGroup::from_cyclic_factors(genus,
                                             {Integer(static_cast<unsigned long>(genus - 1))});
}

std::size_t min_valence(const Multigraph& g) {
    const auto val = g.valences();
    return *std::min_element(val.begin(), val.end());
}

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
    return what + ": got " + got + ", expected " + want;
}

CheckOutcome check_betti_and_cycles(const GraphCase& c) {
    const Multigraph& g = c.graph;
    if (c.genus != g.edge_count() + 1 - g.vertex_count()) return CheckOutcome::fail("betti formula");
    if (spanning_tree(g).size() != g.vertex_count() - 1)
        return CheckOutcome::fail("spanning tree size");
    const auto basis = cycle_basis(g);
    if (basis.size() != c.genus) return CheckOutcome::fail("cycle basis size");
    IntMatrix coeffs(g.edge_count(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (!is_cycle(g, basis[j])) return CheckOutcome::fail("basis vector is not a cycle");
        for (std::size_t i = 0; i < g.edge_count(); ++i) coeffs(i, j) = static_cast<long>(basis[j][i]);
    }
    if (matrix_rank(coeffs) != c.genus) return CheckOutcome::fail("cycle basis rank");
    return CheckOutcome::pass();
}

CheckOutcome check_contraction_structure(const GraphCase& c) {
    const Multigraph& g = c.graph;
    for (std::size_t e : non_loop_edges(g)) {
        const Multigraph h = contract_edge(g, e);
        if (!h.is_connected() || betti_number(h) != c.genus ||
            h.vertex_count() + 1 != g.vertex_count() || h.edge_count() + 1 != g.edge_count())
            return CheckOutcome::fail("contracting edge " + std::to_string(e));
    }
    const Multigraph last = contraction_stages(g).back();
    if (last != generate_flower(c.genus)) return CheckOutcome::fail("contractions do not end in a flower");
    return CheckOutcome::pass();
}

CheckOutcome check_end_edges(const GraphCase& c) {
    const bool no_ends = classify_end_edges(c.graph).empty();
    if (no_ends != (min_valence(c.graph) >= 2))
        return CheckOutcome::fail("end edges do not match minimum valence");
    return CheckOutcome::pass();
}

CheckOutcome check_edge_matrix_structure(const GraphCase& c) {
    const Multigraph& g = c.graph;
    const std::size_t m = g.edge_count();
    const IntMatrix& a = c.matrix.a;
    const auto oe = oriented_edges(g);
    const auto val = g.valences();
    for (const auto& e : oe) {
        Integer sum = 0;
        for (std::size_t j = 0; j < 2 * m; ++j) {
            if (a(e.index, j) != 0 && a(e.index, j) != 1) return CheckOutcome::fail("entry outside {0,1}");
            sum += a(e.index, j);
        }
        if (sum != static_cast<long>(val[e.terminus]) - 1)
            return CheckOutcome::fail("row " + std::to_string(e.index) + " sum is not deg(t(e)) - 1");
    }
    for (std::size_t i = 0; i < 2 * m; ++i)
        for (std::size_t j = 0; j < 2 * m; ++j)
            if (a(i, j) != a(reversal(j, m), reversal(i, m)))
                return CheckOutcome::fail("reversal symmetry broken at (" + std::to_string(i) + ", " +
                                          std::to_string(j) + ")");
    return CheckOutcome::pass();
}

CheckOutcome check_simplicity_gate(const GraphCase& c) {
    const SimplicityFlags f = simplicity(c.matrix);
    const bool has_ends = !classify_end_edges(c.graph).empty();
    if (has_ends && f.irreducible) return CheckOutcome::fail("irreducible despite an end");
    if (!has_ends && c.genus >= 2 && !f.simple())
        return CheckOutcome::fail("not simple although g >= 2 and no ends");
    // A bare cycle: two disjoint orbits, one per direction of travel.
    if (!has_ends && c.genus == 1 && (f.irreducible || !f.permutation))
        return CheckOutcome::fail("a bare cycle should give a reducible permutation");
    return CheckOutcome::pass();
}

CheckOutcome check_smith_form(const GraphCase& c) {
    const IntVector got = smith_normal_form(c.matrix.one_minus_a()).diagonal();
    const IntVector want = expected_smith_diagonal(c.graph.edge_count(), c.genus);
    if (got != want) return CheckOutcome::fail(mismatch("SNF of 1 - A", to_string(got), to_string(want)));
    return CheckOutcome::pass();
}

CheckOutcome check_k_theory(const GraphCase& c) {
    const AbelianGroup want = expected_k0(c.genus);
    const AbelianGroup got = k0_of(c.matrix);
    if (got != want) return CheckOutcome::fail(mismatch("K0", to_string(got), to_string(want)));
    if (cokernel(c.matrix.one_minus_a()) != got)
        return CheckOutcome::fail("K0 from 1 - A differs from K0 from 1 - A^t");
    const std::size_t rank = k1_basis_of(c.matrix).rows();
    const std::size_t want_rank = c.genus >= 2 ? c.genus : 2;
    if (rank != want_rank)
        return CheckOutcome::fail(mismatch("K1 rank", std::to_string(rank), std::to_string(want_rank)));
    return CheckOutcome::pass();
}

CheckOutcome check_kernel_from_cycles(const GraphCase& c) {
    if (c.genus < 2) return CheckOutcome::skip();
    const Multigraph& g = c.graph;
    const std::size_t m = g.edge_count();
    const IntMatrix kernel = k1_basis_of(c.matrix);
    std::vector<IntVector> rows;
    for (const auto& cyc : cycle_basis(g)) rows.push_back(phi(g, cyc));
    const IntMatrix image = IntMatrix::from_rows(rows, 2 * m);
    if (matrix_rank(image) != c.genus) return CheckOutcome::fail("phi is not injective on the basis");
    if (lattice_basis(image) != kernel)
        return CheckOutcome::fail("HNF(phi(Z1)) differs from HNF(ker(1 - T))");
    for (std::size_t e : classify_end_edges(g))
        for (std::size_t r = 0; r < kernel.rows(); ++r)
            if (kernel(r, e) != 0 || kernel(r, e + m) != 0)
                return CheckOutcome::fail("end edge " + std::to_string(e) + " in the kernel support");
    return CheckOutcome::pass();
}

CheckOutcome check_unit_order(const GraphCase& c) {
    const auto sol = unit_multiple_of(c.matrix);
    if (c.genus == 1) {
        if (sol) return CheckOutcome::fail("finite unit order for g = 1");
        return CheckOutcome::pass();
    }
    if (!sol) return CheckOutcome::fail("no multiple of the unit lies in im(1 - A)");
    IntVector scaled(c.matrix.size(), sol->lambda);
    if (c.matrix.one_minus_a() * sol->witness != scaled) return CheckOutcome::fail("witness check");
    const Integer by_vertices = closed_form_unit_order(c.genus, c.graph.vertex_count());
    const Integer by_edges = closed_form_unit_order(c.genus, c.graph.edge_count());
    if (sol->lambda != by_vertices || by_vertices != by_edges)
        return CheckOutcome::fail("unit order " + sol->lambda.get_str() + " vs (g-1)/gcd(g-1,|V|) = " +
                                  by_vertices.get_str() + ", |E| form " + by_edges.get_str());
    // The transpose gives the same answer since 1 is reversal-invariant.
    const auto transposed =
        solve_min_scalar(c.matrix.one_minus_t(), IntVector(c.matrix.size(), Integer(1)));
    if (!transposed || transposed->lambda != sol->lambda)
        return CheckOutcome::fail("unit order depends on the A / A^t convention");
    return CheckOutcome::pass();
}

CheckOutcome check_contraction_smith_step(const GraphCase& c) {
    const IntVector whole = smith_normal_form(c.matrix.one_minus_a()).diagonal();
    for (std::size_t e : non_loop_edges(c.graph)) {
        const IntVector part =
            smith_normal_form(edge_matrix(contract_edge(c.graph, e)).one_minus_a()).diagonal();
        IntVector entries{Integer(1), Integer(1)};
        entries.insert(entries.end(), part.begin(), part.end());
        if (canonical_smith_diagonal(entries) != whole)
            return CheckOutcome::fail("contracting edge " + std::to_string(e) + " changes the SNF");
    }
    return CheckOutcome::pass();
}

CheckOutcome check_transcript(const GraphCase& c) {
    const ReductionTranscript t = contraction_reduce(c.graph);
    const std::size_t n = t.pivot_order.size();
    IntVector want(n - c.genus - 1, Integer(1));
    want.push_back(Integer(static_cast<unsigned long>(c.genus - 1)));
    want.insert(want.end(), c.genus, Integer(0));
    if (t.final_diagonal != want)
        return CheckOutcome::fail(mismatch("final diagonal", to_string(t.final_diagonal), to_string(want)));

    const IntMatrix replayed = t.replay();
    if (!replayed.is_diagonal()) return CheckOutcome::fail("replay is not diagonal");
    for (std::size_t i = 0; i < n; ++i)
        if (replayed(t.pivot_order[i], t.pivot_order[i]) != t.final_diagonal[i])
            return CheckOutcome::fail("replay does not reproduce the diagonal");
    if (t.replay_unit() != t.unit_image) return CheckOutcome::fail("replay does not reproduce X*1");

    for (std::size_t i = n - c.genus; i < n; ++i)
        if (t.unit_image[i] != 0) return CheckOutcome::fail("X*1 has a nonzero trailing entry");
    const Integer top = Integer(static_cast<unsigned long>(c.genus * c.graph.vertex_count()));
    if (t.unit_image[n - c.genus - 1] != top)
        return CheckOutcome::fail(mismatch("(g+1)-to-last entry of X*1",
                                           t.unit_image[n - c.genus - 1].get_str(), top.get_str()));

    const ReductionTranscript shuffled = contraction_reduce(c.graph, std::uint64_t{0x5eed});
    if (shuffled.final_diagonal != t.final_diagonal)
        return CheckOutcome::fail("final diagonal depends on contraction order");
    return CheckOutcome::pass();
}

CheckOutcome check_bass_identity(const GraphCase& c) {
    const IntPolynomial edge_poly = edge_charpoly(c.graph);
    if (edge_poly != ihara_rhs(c.graph))
        return CheckOutcome::fail("det(1 - uT) = " + to_string(edge_poly) + " but the vertex side is " +
                                  to_string(ihara_rhs(c.graph)));
    const std::size_t ord = vanishing_order_at_one(edge_poly);
    const std::size_t want = c.genus >= 2 ? c.genus : 2;
    const std::size_t corank = c.matrix.size() - matrix_rank(c.matrix.one_minus_t());
    if (ord != want || ord != corank)
        return CheckOutcome::fail("ord at u=1 is " + std::to_string(ord) + ", expected " +
                                  std::to_string(want) + ", 2m - rank(1 - T) = " + std::to_string(corank));
    const std::size_t ends = classify_end_edges(c.graph).size();
    const auto want_degree = static_cast<std::ptrdiff_t>(2 * (c.graph.edge_count() - ends));
    if (edge_poly.degree() != want_degree) return CheckOutcome::fail("degree of det(1 - uT)");
    if (ends == 0) {
        IntMatrix minus_a = IntMatrix(c.matrix.size(), c.matrix.size()) - c.matrix.a;
        if (edge_poly.leading_coefficient() != determinant(minus_a))
            return CheckOutcome::fail("leading coefficient differs from det(-A)");
    }
    return CheckOutcome::pass();
}

CheckOutcome check_boundary_compatibility(const GraphCase& c) {
    if (c.genus < 2) return CheckOutcome::skip();
    const bool coprime = boundary_algebra_compatible(c.graph);
    const auto order = unit_order(c.graph).order;
    if (coprime != (order && *order == Integer(static_cast<unsigned long>(c.genus - 1))))
        return CheckOutcome::fail("coprimality does not match maximal unit order");
    return CheckOutcome::pass();
}

std::vector<InvariantCheck> build_checks() {
    return {
        {"betti_and_cycle_basis", check_betti_and_cycles},
        {"contraction_structure", check_contraction_structure},
        {"end_edges", check_end_edges},
        {"edge_matrix_structure", check_edge_matrix_structure},
        {"simplicity_gate", check_simplicity_gate},
        {"smith_form", check_smith_form},
        {"k_theory", check_k_theory},
        {"kernel_from_cycles", check_kernel_from_cycles},
        {"unit_order", check_unit_order},
        {"contraction_smith_step", check_contraction_smith_step},
        {"transcript", check_transcript},
        {"bass_identity", check_bass_identity},
        {"boundary_compatibility", check_boundary_compatibility},
    };
}

}  // namespace

const std::vector<InvariantCheck>& invariant_checks() {
    static const std::vector<InvariantCheck> checks = build_checks();
    return checks;
}

const InvariantCheck& invariant_check(const std::string& name) {
    for (const auto& c : invariant_checks())
        if (c.name == name) return c;
    throw std::out_of_range("unknown invariant check: " + name);
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> out;
    for (std::size_t g = 2; g <= 8; ++g)
        out.push_back({"flower(" + std::to_string(g) + ")", generate_flower(g), g, 1, true, g - 1});
    for (std::size_t g = 3; g <= 8; ++g)
        out.push_back({"theta(" + std::to_string(g) + ")", generate_theta(g), g, 2, true,
                       g % 2 == 1 ? (g - 1) / 2 : g - 1});
    for (std::size_t g = 2; g <= 8; ++g)
        out.push_back({"chain(" + std::to_string(g) + ")", generate_chain(g), g, 2 * g - 2, true,
                       std::size_t{1}});
    out.push_back({"flower(1)", generate_flower(1), 1, 1, true, std::nullopt});
    out.push_back({"cycle(3)", generate_cycle(3), 1, 3, false, std::nullopt});
    return out;
}

}  // namespace

const std::vector<Fixture>& regression_fixtures() {
    static const std::vector<Fixture> fixtures = build_fixtures();
    return fixtures;
}

std::string check_fixture(const Fixture& f) {
    std::ostringstream why;
    const std::size_t genus = betti_number(f.graph);
    if (genus != f.genus) why << "genus " << genus << " != " << f.genus << "; ";
    if (f.graph.vertex_count() != f.vertex_count) why << "vertex count; ";
    if (is_stable(f.graph) != f.stable) why << "stability; ";
    if (k0(f.graph) != expected_k0(f.genus)) why << "K0 " << to_string(k0(f.graph)) << "; ";
    const UnitOrder u = unit_order(f.graph);
    const std::optional<Integer> want =
        f.unit_order ? std::optional<Integer>(Integer(static_cast<unsigned long>(*f.unit_order)))
                     : std::nullopt;
    if (u.order != want)
        why << "unit order " << (u.order ? u.order->get_str() : std::string("none")) << "; ";
    return why.str();
}

// ---------------------------------------------------------------------------
// Driver

SweepSummary run_sweep(const SweepConfig& config) {
    std::vector<Multigraph> graphs;
    if (config.mode == SweepConfig::Mode::Exhaustive) {
        graphs = enumerate_connected_multigraphs(config.max_vertices, config.max_edges);
    } else {
        std::mt19937_64 rng(config.seed);
        for (std::size_t i = 0; i < config.sample_count; ++i)
            graphs.push_back(random_connected_multigraph(rng, config.max_vertices, config.max_edges));
    }

    SweepSummary summary;
    summary.graphs = graphs.size();
    const auto& checks = invariant_checks();
    for (const auto& c : checks) summary.tallies.push_back({c.name});

    auto record_failure = [&](const std::string& name, const Multigraph& g, std::string detail) {
        if (!summary.first_failure) summary.first_failure = Counterexample{name, g, std::move(detail)};
    };

    for (const Multigraph& g : graphs) {
        GraphCase gc(g);
        if (config.inject_mutant && gc.matrix.size() > 0)
            gc.matrix.a(0, 0) = gc.matrix.a(0, 0) == 0 ? 1 : 0;
        for (std::size_t k = 0; k < checks.size(); ++k) {
            CheckOutcome outcome;
            try {
                outcome = checks[k].run(gc);
            } catch (const std::exception& ex) {
                outcome = CheckOutcome::fail(std::string("exception: ") + ex.what());
            }
            auto& tally = summary.tallies[k];
            switch (outcome.status) {
                case Status::Pass: ++tally.passed; break;
                case Status::Skip: ++tally.skipped; break;
                case Status::Fail:
                    ++tally.failed;
                    record_failure(checks[k].name, g, outcome.detail);
                    break;
            }
        }
    }

    if (config.include_fixtures) {
        InvariantTally tally{"fixtures"};
        for (const auto& f : regression_fixtures()) {
            std::string why;
            try {
                why = check_fixture(f);
            } catch (const std::exception& ex) {
                why = std::string("exception: ") + ex.what();
            }
            if (why.empty()) {
                ++tally.passed;
            } else {
                ++tally.failed;
                record_failure("fixtures", f.graph, f.name + ": " + why);
            }
        }
        summary.tallies.push_back(std::move(tally));
    }
    return summary;
}

}  // namespace ckgraph
