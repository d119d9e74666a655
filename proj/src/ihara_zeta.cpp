#include "ckgraph/ihara_zeta.hpp"

#include "ckgraph/edge_operator.hpp"
#include "ckgraph/errors.hpp"

namespace ckgraph {

IntPolynomial edge_charpoly(const Multigraph& g) {
    const EdgeMatrix em = edge_matrix(g);
    const std::size_t n = em.size();
    PolyMatrix p(n, std::vector<IntPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p[i][j] = IntPolynomial(IntVector{Integer(i == j ? 1 : 0), Integer(-em.a(i, j))});
    return poly_matrix_det(p);
}

IntPolynomial ihara_rhs(const Multigraph& g) {
    const std::size_t genus = betti_number(g);
    if (genus == 0) throw DomainError("g >= 1 required");
    const std::size_t n = g.vertex_count();
    IntMatrix adjacency(n, n);
    for (const Edge& e : g.edges()) {
        adjacency(e.u, e.v) += 1;
        adjacency(e.v, e.u) += 1;  // a loop lands twice on the diagonal
    }
    const auto val = g.valences();
    PolyMatrix p(n, std::vector<IntPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Integer q = i == j ? Integer(static_cast<unsigned long>(val[i])) - 1 : Integer(0);
            p[i][j] = IntPolynomial(IntVector{Integer(i == j ? 1 : 0), -adjacency(i, j), q});
        }
    return IntPolynomial{1, 0, -1}.pow(genus - 1) * poly_matrix_det(p);
}

bool verify_bass_identity(const Multigraph& g) {
    if (betti_number(g) == 0) throw DomainError("g >= 1 required");
    return edge_charpoly(g) == ihara_rhs(g);
}

std::size_t vanishing_order_at_one(const IntPolynomial& p) {
    if (p.is_zero()) throw DomainError("vanishing order of the zero polynomial");
    std::size_t k = 0;
    IntPolynomial q = p;
    while (auto next = q.divide_by_one_minus_u()) {
        q = std::move(*next);
        ++k;
    }
    return k;
}

ZetaReport zeta_report(const Multigraph& g) {
    ZetaReport r;
    r.genus = betti_number(g);
    if (r.genus == 0) throw DomainError("g >= 1 required");
    r.edge_poly = edge_charpoly(g);
    r.vertex_poly = ihara_rhs(g);
    r.identity_holds = r.edge_poly == r.vertex_poly;
    r.ord_at_one = vanishing_order_at_one(r.edge_poly);
    return r;
}

}  // namespace ckgraph
