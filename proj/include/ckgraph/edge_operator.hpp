#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ckgraph/exact_linalg.hpp"
#include "ckgraph/multigraph.hpp"

namespace ckgraph {

// Oriented edges of a graph with m geometric edges are indexed 0..2m-1:
// index i < m is edge i in its stored orientation u -> v, index m + i is its
// reversal.

inline std::size_t reversal(std::size_t index, std::size_t edge_count) {
    return index < edge_count ? index + edge_count : index - edge_count;
}

struct OrientedEdge {
    std::size_t index;
    std::size_t origin;
    std::size_t terminus;

    friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

std::vector<OrientedEdge> oriented_edges(const Multigraph& g);

/// The non-backtracking edge operator T as a 2m x 2m 0/1 matrix A with
/// A[e][e'] = 1 iff t(e) = o(e') and e' is not the reversal of e.
///
/// Row e lists T(e), so for a row vector x, (T x)ᵀ = xᵀ·A, and the matrix of
/// T acting on column vectors is Aᵗ.
struct EdgeMatrix {
    std::size_t edge_count = 0;  // m
    IntMatrix a;                 // 2m x 2m

    std::size_t size() const { return a.rows(); }
    /// 1 - A.
    IntMatrix one_minus_a() const;
    /// 1 - Aᵗ: the matrix of 1 - T acting on column vectors.
    IntMatrix one_minus_t() const;
};

EdgeMatrix edge_matrix(const Multigraph& g);

/// Strong connectivity of the arc graph {e -> e' : A[e][e'] = 1}, checked by a
/// forward and a backward reachability sweep. The empty matrix and the 1x1
/// zero matrix are not irreducible.
bool is_irreducible(const EdgeMatrix& m);

/// Every row and every column has exactly one nonzero entry, equal to 1.
bool is_permutation(const EdgeMatrix& m);

/// Dense JSON array of rows.
std::string edge_matrix_json(const EdgeMatrix& m);
/// `2m` on the first line, then one `row col` line per nonzero entry.
std::string edge_matrix_coordinates(const EdgeMatrix& m);

}  // namespace ckgraph
