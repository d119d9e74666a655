#pragma once

// Slow, obviously-correct reference computations used as test oracles.

#include <algorithm>
#include <cstdint>
#include <random>
#include <type_traits>
#include <vector>

#include "ckgraph/exact_linalg.hpp"
#include "ckgraph/multigraph.hpp"

namespace oracle {

using ckgraph::Integer;
using ckgraph::IntMatrix;
using ckgraph::IntPolynomial;
using ckgraph::Multigraph;
using ckgraph::PolyMatrix;

// Laplace expansion along the first row.
template <class T, class Get>
T cofactor_det(std::size_t n, std::vector<std::size_t> cols, std::size_t row, Get get) {
    if (cols.empty()) {
        if constexpr (std::is_same_v<T, Integer>) return Integer(1);
        else return T::constant(1);
    }
    T total{};
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> rest = cols;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        T term = get(row, cols[k]) * cofactor_det<T>(n, rest, row + 1, get);
        if (k % 2 == 0) total = total + term;
        else total = total - term;
    }
    return total;
}

inline Integer determinant(const IntMatrix& m) {
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return cofactor_det<Integer>(m.rows(), cols, 0,
                                 [&](std::size_t r, std::size_t c) { return m(r, c); });
}

inline IntPolynomial determinant(const PolyMatrix& m) {
    std::vector<std::size_t> cols(m.size());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return cofactor_det<IntPolynomial>(m.size(), cols, 0,
                                       [&](std::size_t r, std::size_t c) { return m[r][c]; });
}

// Oriented edge k: k < m is edge k as stored, k >= m its reversal.
struct Arc {
    std::size_t from, to, reverse;
};

inline std::vector<Arc> arcs(const Multigraph& g) {
    const std::size_t m = g.edge_count();
    std::vector<Arc> out(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = {g.edge(i).u, g.edge(i).v, i + m};
        out[i + m] = {g.edge(i).v, g.edge(i).u, i};
    }
    return out;
}

// Non-backtracking matrix straight from its definition.
inline IntMatrix edge_matrix(const Multigraph& g) {
    const auto a = arcs(g);
    IntMatrix out(a.size(), a.size());
    for (std::size_t e = 0; e < a.size(); ++e)
        for (std::size_t f = 0; f < a.size(); ++f)
            if (a[e].to == a[f].from && f != a[e].reverse) out(e, f) = 1;
    return out;
}

// Transitive closure by Floyd-Warshall.
inline bool strongly_connected(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return false;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) reach[i][j] = a(i, j) != 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!reach[i][j]) return false;
    return true;
}

inline bool connected_without(const Multigraph& g, std::size_t skip) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            if (i == skip) continue;
            const auto& e = g.edge(i);
            for (auto [p, q] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
                if (p == x && !seen[q]) {
                    seen[q] = true;
                    stack.push_back(q);
                }
        }
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

// Edge i lies in an end iff deleting it splits off a piece that is a tree.
inline bool is_end_edge(const Multigraph& g, std::size_t i) {
    if (g.edge(i).is_loop() || connected_without(g, i)) return false;
    // Vertices on the far side of i from u.
    const std::size_t n = g.vertex_count();
    for (std::size_t side : {g.edge(i).u, g.edge(i).v}) {
        std::vector<bool> seen(n);
        std::vector<std::size_t> stack{side};
        seen[side] = true;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < g.edge_count(); ++j) {
                if (j == i) continue;
                const auto& e = g.edge(j);
                for (auto [p, q] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
                    if (p == x && !seen[q]) {
                        seen[q] = true;
                        stack.push_back(q);
                    }
            }
        }
        std::size_t vertices = 0, edges = 0;
        for (std::size_t v = 0; v < n; ++v) vertices += seen[v];
        for (std::size_t j = 0; j < g.edge_count(); ++j)
            if (j != i && seen[g.edge(j).u]) ++edges;
        if (edges + 1 == vertices) return true;
    }
    return false;
}

// Random connected multigraph: random tree plus extra random edges.
inline Multigraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_extra,
                               std::size_t min_extra = 1) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
    const std::size_t extra = std::uniform_int_distribution<std::size_t>(min_extra, max_extra)(rng);
    std::vector<ckgraph::Edge> edges;
    for (std::size_t v = 1; v < n; ++v)
        edges.push_back({std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v});
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < extra; ++k) edges.push_back({pick(rng), pick(rng)});
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& e : edges)
        if (rng() & 1) std::swap(e.u, e.v);
    return Multigraph(n, std::move(edges));
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
    return m;
}

// Product of random elementary row operations: a random unimodular matrix.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> factor(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t a = idx(rng), b = idx(rng);
        if (a != b) u.add_row_multiple(a, b, factor(rng));
        if (s % 5 == 0) u.swap_rows(a, b);
    }
    return u;
}

}  // namespace oracle
