#pragma once

#include <cstddef>

#include "ckgraph/exact_linalg.hpp"
#include "ckgraph/multigraph.hpp"

namespace ckgraph {

/// det(1 - u·T) = det(I - u·A).
IntPolynomial edge_charpoly(const Multigraph& g);

/// (1 - u²)^(g-1) · det(I - u·A_V + u²·(D - I)), where A_V is the vertex
/// adjacency matrix (a loop adds 2 to its diagonal entry) and D the valence
/// diagonal (a loop counts 2). Throws DomainError for g = 0.
IntPolynomial ihara_rhs(const Multigraph& g);

/// Coefficientwise equality of edge_charpoly and ihara_rhs.
bool verify_bass_identity(const Multigraph& g);

/// Largest k with (1 - u)^k dividing p. Throws DomainError for p = 0.
std::size_t vanishing_order_at_one(const IntPolynomial& p);

struct ZetaReport {
    std::size_t genus = 0;
    IntPolynomial edge_poly;
    IntPolynomial vertex_poly;
    bool identity_holds = false;
    std::size_t ord_at_one = 0;
};

ZetaReport zeta_report(const Multigraph& g);

}  // namespace ckgraph
