#include "ckgraph/ktheory.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "ckgraph/errors.hpp"

namespace ckgraph {

namespace {

std::size_t checked_genus(const Multigraph& g, std::size_t minimum, const char* message) {
    const std::size_t genus = betti_number(g);  // throws on disconnected input
    if (genus < minimum) throw DomainError(message);
    return genus;
}

bool in_kernel(const IntMatrix& m, const IntVector& x) {
    for (const Integer& v : m * x)
        if (v != 0) return false;
    return true;
}

}  // namespace

SimplicityFlags simplicity(const EdgeMatrix& m) { return {is_irreducible(m), is_permutation(m)}; }

AbelianGroup k0_of(const EdgeMatrix& m) { return cokernel(m.one_minus_t()); }

IntMatrix k1_basis_of(const EdgeMatrix& m) { return kernel_basis(m.one_minus_t()); }

std::optional<ScalarSolution> unit_multiple_of(const EdgeMatrix& m) {
    return solve_min_scalar(m.one_minus_a(), IntVector(m.size(), Integer(1)));
}

IntVector unit_class_is_one_vector(const Multigraph& g) {
    return IntVector(2 * g.edge_count(), Integer(1));
}

AbelianGroup k0(const Multigraph& g) {
    checked_genus(g, 1, "g >= 1 required");
    const EdgeMatrix em = edge_matrix(g);
    AbelianGroup group = k0_of(em);
    if (cokernel(em.one_minus_a()) != group)
        throw TheoremViolation("K0 differs between 1 - A and 1 - A^t");
    return group;
}

K1Result k1(const Multigraph& g) {
    checked_genus(g, 1, "g >= 1 required");
    IntMatrix basis = k1_basis_of(edge_matrix(g));
    return {basis.rows(), std::move(basis)};
}

IntVector phi(const Multigraph& g, const CycleVector& c) {
    if (!is_cycle(g, c)) throw DomainError("vector is not a cycle");
    const std::size_t m = g.edge_count();
    IntVector out(2 * m, Integer(0));
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = static_cast<long>(c[i]);
        out[m + i] = -static_cast<long>(c[i]);
    }
    if (!in_kernel(edge_matrix(g).one_minus_t(), out))
        throw TheoremViolation("phi(c) is not annihilated by 1 - T");
    return out;
}

bool phi_image_equals_kernel(const Multigraph& g) {
    checked_genus(g, 2, "g >= 2 required");
    std::vector<IntVector> rows;
    for (const auto& c : cycle_basis(g)) rows.push_back(phi(g, c));
    const IntMatrix image = lattice_basis(IntMatrix::from_rows(rows, 2 * g.edge_count()));
    return image == k1(g).basis;
}

std::pair<IntVector, IntVector> g1_kernel_generators(const Multigraph& g) {
    if (betti_number(g) != 1) throw DomainError("g = 1 required");
    const std::size_t m = g.edge_count();
    const CycleVector c = cycle_basis(g).front();

    IntVector outward(2 * m, Integer(0));
    constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.vertex_count(), unreached);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < m; ++i) {
        if (c[i] == 0) continue;
        outward[c[i] > 0 ? i : m + i] += 1;
        for (std::size_t v : {g.edge(i).u, g.edge(i).v})
            if (dist[v] == unreached) {
                dist[v] = 0;
                queue.push_back(v);
            }
    }
    std::vector<std::vector<std::size_t>> incident(g.vertex_count());
    for (std::size_t i = 0; i < m; ++i) {
        incident[g.edge(i).u].push_back(g.edge(i).v);
        incident[g.edge(i).v].push_back(g.edge(i).u);
    }
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t y : incident[x])
            if (dist[y] == unreached) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (c[i] != 0) continue;
        const bool forward = dist[g.edge(i).u] < dist[g.edge(i).v];
        outward[forward ? i : m + i] += 1;
    }

    IntVector cycle_image = phi(g, c);
    if (!in_kernel(edge_matrix(g).one_minus_t(), outward))
        throw TheoremViolation("cycle plus outward edges is not annihilated by 1 - T");
    return {std::move(cycle_image), std::move(outward)};
}

// ---------------------------------------------------------------------------
// Contraction-based reduction

IntMatrix ReductionTranscript::replay() const {
    IntMatrix m = start;
    for (const auto& op : ops) apply(op, m);
    return m;
}

IntVector ReductionTranscript::replay_unit() const {
    IntVector unit(start.rows(), Integer(1));
    for (const auto& op : ops) apply_row_op(op, unit);
    IntVector ordered;
    ordered.reserve(pivot_order.size());
    for (std::size_t p : pivot_order) ordered.push_back(unit[p]);
    return ordered;
}

ReductionTranscript contraction_reduce(const Multigraph& g,
                                       std::optional<std::uint64_t> shuffle_seed) {
    const std::size_t genus = checked_genus(g, 1, "g >= 1 required");
    const std::size_t m = g.edge_count();

    ReductionTranscript tr;
    tr.genus = genus;
    tr.vertex_count = g.vertex_count();
    tr.start = edge_matrix(g).one_minus_a();

    IntMatrix work = tr.start;
    IntVector unit(2 * m, Integer(1));
    auto run = [&](ElementaryOp op) {
        apply(op, work);
        apply_row_op(op, unit);
        tr.ops.push_back(std::move(op));
    };

    std::mt19937_64 rng(shuffle_seed.value_or(0));
    Multigraph current = g;
    std::vector<std::size_t> original(m);  // current geometric edge -> original
    std::iota(original.begin(), original.end(), std::size_t{0});
    auto global = [&](std::size_t oriented) {
        const std::size_t mc = current.edge_count();
        return oriented < mc ? original[oriented] : original[oriented - mc] + m;
    };

    for (;;) {
        const auto candidates = non_loop_edges(current);
        if (candidates.empty()) break;
        std::size_t k = candidates.front();
        if (shuffle_seed) {
            std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
            k = candidates[pick(rng)];
        }
        const std::size_t mc = current.edge_count();
        const std::size_t gamma = global(k), gamma_bar = global(k + mc);
        const std::size_t origin = current.edge(k).u, terminus = current.edge(k).v;

        // Feed row γ into every edge flowing into o(γ), and row γ̄ into every
        // edge flowing into o(γ̄), except the reversal in each case.
        for (const auto& e : oriented_edges(current)) {
            if (e.terminus == origin && e.index != k + mc)
                run(ElementaryOp::add_row(global(e.index), gamma, Integer(1)));
            else if (e.terminus == terminus && e.index != k)
                run(ElementaryOp::add_row(global(e.index), gamma_bar, Integer(1)));
        }
        if (work(gamma, gamma) != 1 || work(gamma_bar, gamma_bar) != 1 ||
            work(gamma, gamma_bar) != 0 || work(gamma_bar, gamma) != 0)
            throw TheoremViolation("contraction step did not produce an identity corner");

        for (std::size_t j = 0; j < 2 * mc; ++j) {
            const std::size_t col = global(j);
            if (col == gamma || col == gamma_bar) continue;
            if (work(gamma, col) != 0) run(ElementaryOp::add_col(col, gamma, -work(gamma, col)));
            if (work(gamma_bar, col) != 0)
                run(ElementaryOp::add_col(col, gamma_bar, -work(gamma_bar, col)));
        }

        tr.pivot_order.push_back(gamma);
        tr.pivot_order.push_back(gamma_bar);
        tr.contraction_order.push_back(original[k]);
        current = contract_edge(current, k);
        original.erase(original.begin() + static_cast<std::ptrdiff_t>(k));
    }

    // Flower block: rows/cols a_1..a_g and their reversals, where 1 - A
    // restricts to [[C, C], [C, C]] with C = I - J.
    const std::size_t petals = current.edge_count();
    std::vector<std::size_t> a(petals), abar(petals);
    for (std::size_t i = 0; i < petals; ++i) {
        a[i] = original[i];
        abar[i] = original[i] + m;
    }
    for (std::size_t i = 0; i < petals; ++i) run(ElementaryOp::add_row(abar[i], a[i], Integer(-1)));
    for (std::size_t i = 0; i < petals; ++i) run(ElementaryOp::add_col(abar[i], a[i], Integer(-1)));

    if (petals >= 2) {
        const std::size_t first = a.front(), last = a.back();
        for (std::size_t j = 1; j < petals; ++j) run(ElementaryOp::add_col(a[j], first, Integer(-1)));
        // The last row collects all others and becomes (-(g-1), 0, ..., 0).
        for (std::size_t i = 0; i + 1 < petals; ++i) run(ElementaryOp::add_row(last, a[i], Integer(1)));
        for (std::size_t i = 1; i + 1 < petals; ++i) run(ElementaryOp::add_col(first, a[i], Integer(1)));
        for (std::size_t i = 1; i + 1 < petals; ++i) run(ElementaryOp::add_row(first, a[i], Integer(1)));
        if (petals > 2)
            run(ElementaryOp::add_col(first, last, -Integer(static_cast<long>(petals) - 2)));
        run(ElementaryOp::negate_col(first));
        run(ElementaryOp::negate_col(last));
        run(ElementaryOp::swap_cols(first, last));
    }
    for (std::size_t p : a) tr.pivot_order.push_back(p);
    for (std::size_t p : abar) tr.pivot_order.push_back(p);

    if (!work.is_diagonal()) throw TheoremViolation("contraction reduction did not diagonalize 1 - A");
    for (std::size_t p : tr.pivot_order) {
        tr.final_diagonal.push_back(work(p, p));
        tr.unit_image.push_back(unit[p]);
    }
    return tr;
}

std::string to_string(const ReductionTranscript& t) {
    std::ostringstream os;
    os << "# genus " << t.genus << ", vertices " << t.vertex_count << ", size " << t.start.rows()
       << '\n';
    os << "# contracted edges:";
    for (std::size_t e : t.contraction_order) os << ' ' << e;
    os << '\n';
    for (const auto& op : t.ops) os << to_string(op) << '\n';
    os << "# pivot order: ";
    for (std::size_t i = 0; i < t.pivot_order.size(); ++i) os << (i ? " " : "") << t.pivot_order[i];
    os << "\n# final diagonal: " << to_string(t.final_diagonal) << '\n';
    os << "# unit image: " << to_string(t.unit_image) << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Unit class

Integer closed_form_unit_order(std::size_t genus, std::size_t n) {
    if (genus < 2) throw DomainError("g >= 2 required");
    const Integer gm1(static_cast<unsigned long>(genus - 1));
    Integer d;
    mpz_gcd_ui(d.get_mpz_t(), gm1.get_mpz_t(), static_cast<unsigned long>(n));
    return gm1 / d;
}

UnitOrder unit_order(const Multigraph& g) {
    const std::size_t genus = checked_genus(g, 1, "g >= 1 required");
    const auto sol = unit_multiple_of(edge_matrix(g));
    UnitOrder out;
    if (sol) {
        out.order = sol->lambda;
        out.witness = sol->witness;
    }
    if (genus == 1) {
        if (sol) throw TheoremViolation("unit class has finite order for g = 1");
        return out;
    }
    out.closed_form = closed_form_unit_order(genus, g.vertex_count());
    if (closed_form_unit_order(genus, g.edge_count()) != *out.closed_form)
        throw TheoremViolation("vertex and edge forms of the unit order disagree");
    if (!sol || sol->lambda != *out.closed_form)
        throw TheoremViolation("unit order from the linear system differs from (g-1)/gcd(g-1,|V|)");
    return out;
}

TorsionClass unit_torsion_class(const Multigraph& g) {
    const std::size_t genus = checked_genus(g, 2, "g >= 2 required");
    const EdgeMatrix em = edge_matrix(g);
    const SmithDecomposition s = smith_normal_form(em.one_minus_t());
    const IntVector c = s.X * unit_class_is_one_vector(g);
    const Integer modulus(static_cast<unsigned long>(genus - 1));
    TorsionClass tc{modulus, Integer(0)};
    const IntVector diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] == 0 && c[i] != 0) throw TheoremViolation("unit class has a free component");
        if (diag[i] >= 2) {
            if (diag[i] != modulus) throw TheoremViolation("unexpected torsion factor");
            mpz_fdiv_r(tc.residue.get_mpz_t(), c[i].get_mpz_t(), modulus.get_mpz_t());
        }
    }
    return tc;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Equivalent: return "EQUIVALENT";
        case Verdict::NotEquivalent: return "NOT_EQUIVALENT";
        case Verdict::Isomorphic: return "ISOMORPHIC";
        case Verdict::NotIsomorphic: return "NOT_ISOMORPHIC";
        case Verdict::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

namespace {

GraphEvidence gather_evidence(const Multigraph& g, bool with_unit) {
    GraphEvidence ev;
    ev.genus = checked_genus(g, 2, "classification proven only for g >= 2");
    ev.k0 = k0(g);
    ev.simplicity = simplicity(edge_matrix(g));
    if (with_unit) {
        UnitOrder u = unit_order(g);
        ev.unit_order = u.order;
        ev.unit_witness = std::move(u.witness);
    }
    return ev;
}

}  // namespace

Classification classify_stable(const Multigraph& g1, const Multigraph& g2) {
    Classification c{Verdict::NotEquivalent, gather_evidence(g1, false), gather_evidence(g2, false), false, {}};
    const bool same_genus = c.first.genus == c.second.genus;
    if (same_genus != (c.first.k0 == c.second.k0))
        throw TheoremViolation("K0 does not track the Betti number");
    c.verdict = same_genus ? Verdict::Equivalent : Verdict::NotEquivalent;
    c.simplicity_caveat = !(c.first.simplicity.simple() && c.second.simplicity.simple());
    c.reason = same_genus ? "equal Betti numbers give isomorphic K0 groups"
                          : "K0 groups differ: " + to_string(c.first.k0) + " vs " +
                                to_string(c.second.k0);
    if (c.simplicity_caveat) c.reason += "; simplicity hypotheses fail for at least one graph";
    return c;
}

Classification classify_strict(const Multigraph& g1, const Multigraph& g2) {
    Classification c{Verdict::Indeterminate, gather_evidence(g1, true), gather_evidence(g2, true), false, {}};
    c.simplicity_caveat = !(c.first.simplicity.simple() && c.second.simplicity.simple());
    if (c.simplicity_caveat) {
        c.reason = "simplicity hypotheses (irreducible, not a permutation) fail for at least one graph";
        return c;
    }
    if (c.first.genus != c.second.genus) {
        c.verdict = Verdict::NotIsomorphic;
        c.reason = "Betti numbers differ";
    } else if (c.first.unit_order != c.second.unit_order) {
        c.verdict = Verdict::NotIsomorphic;
        c.reason = "unit classes have different orders";
    } else {
        c.verdict = Verdict::Isomorphic;
        c.reason = "same K0 and unit classes of equal order";
    }
    return c;
}

bool boundary_algebra_compatible(const Multigraph& g) {
    const std::size_t genus = checked_genus(g, 2, "g >= 2 required");
    const bool coprime = std::gcd(genus - 1, g.vertex_count()) == 1;
    const UnitOrder u = unit_order(g);
    const bool maximal = u.order && *u.order == Integer(static_cast<unsigned long>(genus - 1));
    if (coprime != maximal)
        throw TheoremViolation("coprimality of (g-1, |V|) does not match a unit of order g-1");
    return coprime;
}

KTheoryReport ktheory_report(const Multigraph& g) {
    KTheoryReport r;
    r.genus = checked_genus(g, 1, "g >= 1 required");
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    r.k0 = k0(g);
    K1Result kr = k1(g);
    r.k1_rank = kr.rank;
    r.k1_basis = std::move(kr.basis);
    r.unit = unit_order(g);
    r.simplicity = simplicity(edge_matrix(g));
    return r;
}

}  // namespace ckgraph
