#include "ckgraph/edge_operator.hpp"

#include <sstream>

#include <json.hpp>

namespace ckgraph {

std::vector<OrientedEdge> oriented_edges(const Multigraph& g) {
    const std::size_t m = g.edge_count();
    std::vector<OrientedEdge> out;
    out.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) out.push_back({i, g.edge(i).u, g.edge(i).v});
    for (std::size_t i = 0; i < m; ++i) out.push_back({m + i, g.edge(i).v, g.edge(i).u});
    return out;
}

EdgeMatrix edge_matrix(const Multigraph& g) {
    const std::size_t m = g.edge_count();
    const auto oe = oriented_edges(g);
    EdgeMatrix em{m, IntMatrix(2 * m, 2 * m)};
    for (const auto& e : oe)
        for (const auto& f : oe)
            if (e.terminus == f.origin && f.index != reversal(e.index, m)) em.a(e.index, f.index) = 1;
    return em;
}

IntMatrix EdgeMatrix::one_minus_a() const { return IntMatrix::identity(size()) - a; }

IntMatrix EdgeMatrix::one_minus_t() const { return IntMatrix::identity(size()) - a.transposed(); }

namespace {

std::vector<bool> reachable(const IntMatrix& a, bool forward) {
    const std::size_t n = a.rows();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < n; ++y) {
            const bool arc = forward ? a(x, y) != 0 : a(y, x) != 0;
            if (arc && !seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }
    return seen;
}

}  // namespace

bool is_irreducible(const EdgeMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return false;
    if (n == 1) return m.a(0, 0) != 0;
    for (bool forward : {true, false}) {
        const auto seen = reachable(m.a, forward);
        for (bool s : seen)
            if (!s) return false;
    }
    return true;
}

bool is_permutation(const EdgeMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> col_ones(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t row_ones = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (m.a(r, c) == 0) continue;
            if (m.a(r, c) != 1) return false;
            ++row_ones;
            ++col_ones[c];
        }
        if (row_ones != 1) return false;
    }
    for (std::size_t c : col_ones)
        if (c != 1) return false;
    return true;
}

std::string edge_matrix_json(const EdgeMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m.a(r, c).get_si());
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

std::string edge_matrix_coordinates(const EdgeMatrix& m) {
    std::ostringstream os;
    os << m.size() << '\n';
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c)
            if (m.a(r, c) != 0) os << r << ' ' << c << '\n';
    return os.str();
}

}  // namespace ckgraph
